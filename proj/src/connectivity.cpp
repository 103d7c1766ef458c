#include <algorithm>
#include <queue>

#include "rpg/checkers.hpp"

namespace rpg {

namespace {

// Unit-capacity flow network with vertex splitting: vertex v becomes
// v_in = 2v, v_out = 2v+1 joined by a capacity-1 arc. Edge {u,v} becomes
// u_out->v_in and v_out->u_in.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    // One BFS augmenting step; returns true if an s-t path was pushed.
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, -1};
        while (!q.empty() && pred[t].first < 0) {
            int u = q.front();
            q.pop();
            for (size_t i = 0; i < arcs[u].size(); ++i) {
                const Arc& a = arcs[u][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {u, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [u, i] = pred[v];
            arcs[u][i].cap -= 1;
            arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
            v = u;
        }
        return true;
    }

    // Residual reachability from s.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }
};

FlowNet build_net(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v)
        net.add(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    // edge arcs never bottleneck, so minimum cuts sit on split arcs and
    // extract_cut always reads off a genuine vertex cut
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, n);
        net.add(2 * v + 1, 2 * u, n);
    }
    return net;
}

int run_flow(FlowNet& net, int s, int t, int cutoff) {
    int flow = 0;
    while (cutoff < 0 || flow < cutoff) {
        if (!net.augment(2 * s + 1, 2 * t)) break;
        ++flow;
    }
    return flow;
}

VertexSet extract_cut(const FlowNet& net, const Graph& g, int s) {
    auto seen = net.reachable(2 * s + 1);
    VertexSet cut;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    return cut;
}

}  // namespace

int local_connectivity(const Graph& g, int s, int t, int cutoff) {
    if (s == t) throw std::invalid_argument("local_connectivity: s == t");
    FlowNet net = build_net(g, s, t);
    return run_flow(net, s, t, cutoff);
}

ConnectivityResult vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    ConnectivityResult res;
    if (n <= 1) {
        res.kappa = std::max(0, n - 1);
        res.complete = true;
        return res;
    }
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) {
        res.kappa = n - 1;
        res.complete = true;
        return res;
    }
    if (!is_connected(g)) {
        res.kappa = 0;
        return res;
    }

    // kappa <= min degree; anchor at a minimum-degree vertex. Any minimum
    // cut either avoids the anchor (some non-neighbor ends up across it) or
    // contains it (two of its neighbors end up in distinct components), so
    // flows from the anchor to its non-neighbors plus flows between
    // non-adjacent neighbor pairs cover all cases.
    int anchor = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(anchor)) anchor = v;

    int best = g.degree(anchor);
    std::pair<int, int> best_pair{-1, -1};

    auto probe = [&](int s, int t) {
        FlowNet net = build_net(g, s, t);
        int f = run_flow(net, s, t, best);
        if (f < best) {
            best = f;
            best_pair = {s, t};
        }
    };

    for (int t = 0; t < n; ++t)
        if (t != anchor && !g.has_edge(anchor, t)) probe(anchor, t);
    const auto& nb = g.neighbors(anchor);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) probe(nb[i], nb[j]);

    res.kappa = best;
    if (best_pair.first < 0) {
        res.cut = g.neighbors(anchor);  // removing N(anchor) isolates it
    } else {
        FlowNet net = build_net(g, best_pair.first, best_pair.second);
        run_flow(net, best_pair.first, best_pair.second, -1);
        res.cut = extract_cut(net, g, best_pair.first);
    }
    return res;
}

}  // namespace rpg
