#include "rpg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rpg {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Graph Graph::empty(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex out of range");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    long long m = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<long long>(nb.size());
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return from_edges(n, es);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) es.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
    return from_edges(n, es);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return from_edges(n, es);
}

Graph Graph::complete_bipartite(int left, int right) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) es.emplace_back(u, left + v);
    return from_edges(left + right, es);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Digraph Digraph::empty(int n) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    Digraph d;
    d.n_ = n;
    d.out_adj_.assign(n, {});
    return d;
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d = empty(n);
    for (auto [u, v] : arcs) {
        if (u == v) throw std::invalid_argument("digraph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("digraph: vertex out of range");
        d.out_adj_[u].push_back(v);
    }
    long long m = 0;
    for (auto& nb : d.out_adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<long long>(nb.size());
    }
    d.m_ = m;
    return d;
}

Digraph Digraph::complete(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return from_arcs(n, arcs);
}

bool Digraph::has_arc(int u, int v) const {
    const auto& nb = out_adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : out_adj_[u]) out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("degree_stats: empty graph");
    DegreeStats s;
    s.vertex_count = n;
    s.min_degree = g.degree(0);
    s.max_degree = g.degree(0);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        s.degree_sum += d;
    }
    return s;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    VertexSet sel = make_vertex_set(s);
    std::vector<int> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < sel.size(); ++i) {
        if (sel[i] < 0 || sel[i] >= g.vertex_count())
            throw std::invalid_argument("induced: vertex out of range");
        to_new[sel[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (int u : sel)
        for (int v : g.neighbors(u))
            if (u < v && to_new[v] >= 0) es.emplace_back(to_new[u], to_new[v]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(sel.size()), es);
    out.to_host = sel;
    return out;
}

Graph graph_union(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("graph_union: vertex count mismatch");
    auto es = g.edges();
    auto hs = h.edges();
    es.insert(es.end(), hs.begin(), hs.end());
    return Graph::from_edges(g.vertex_count(), es);
}

DegeneracyResult degeneracy_ordering(const Graph& g, int bound) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    DegeneracyResult res;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (pick < 0 || deg[v] < deg[pick]) pick = v;
        }
        if (deg[pick] > bound) {
            for (int v = 0; v < n; ++v)
                if (!removed[v]) res.witness.push_back(v);
            res.ok = false;
            return res;
        }
        removed[pick] = 1;
        res.order.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    res.ok = true;
    return res;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(g.vertex_count(), 0), hit(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("neighborhood: vertex out of range");
        in_s[v] = 1;
    }
    VertexSet out;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (!in_s[u] && !hit[u]) {
                hit[u] = 1;
                out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return connected_components(g).size() == 1;
}

}  // namespace rpg
