#include "rpg/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rpg {

namespace {

std::pair<int, long long> read_header(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph format: bad header");
    if (n < 0 || m < 0) throw std::invalid_argument("graph format: negative header");
    return {n, m};
}

}  // namespace

Graph read_graph(std::istream& in) {
    auto [n, m] = read_header(in);
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph format: truncated edge list");
        if (!(0 <= u && u < v && v < n))
            throw std::invalid_argument("graph format: edge must satisfy 0 <= u < v < n");
        es.emplace_back(u, v);
    }
    Graph g = Graph::from_edges(n, es);
    if (g.edge_count() != m) throw std::invalid_argument("graph format: duplicate edge");
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph(out, g);
}

Digraph read_digraph(std::istream& in) {
    auto [n, m] = read_header(in);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("digraph format: truncated arc list");
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("digraph format: bad arc");
        arcs.emplace_back(u, v);
    }
    Digraph d = Digraph::from_arcs(n, arcs);
    if (d.arc_count() != m) throw std::invalid_argument("digraph format: duplicate arc");
    return d;
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

}  // namespace rpg
