#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rpg {

using Vertex = int;

/// Sorted, duplicate-free list of vertex labels of some host graph.
using VertexSet = std::vector<Vertex>;

/// Canonicalize an arbitrary vertex list into a VertexSet (sort + dedup).
VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Immutable simple undirected graph on vertices 0..n-1.
/// Neighbor lists are kept sorted; all operations producing graphs return
/// new values.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    /// Builds from an edge list. Throws std::invalid_argument on self-loops
    /// or out-of-range endpoints. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int left, int right);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Simple directed graph; arcs (i,j) and (j,i) are independent.
class Digraph {
public:
    Digraph() = default;

    static Digraph empty(int n);
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    static Digraph complete(int n);

    int vertex_count() const { return n_; }
    long long arc_count() const { return m_; }
    const std::vector<int>& out_neighbors(int v) const { return out_adj_[v]; }
    bool has_arc(int u, int v) const;
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> out_adj_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    long long degree_sum = 0;  // average is degree_sum / vertex_count, exactly
    int vertex_count = 0;

    double average() const { return static_cast<double>(degree_sum) / vertex_count; }
};

DegreeStats degree_stats(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // to_host[new label] = host label
};

/// Subgraph induced on s, relabeled 0..|s|-1 in sorted host order.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Edge-set union of two graphs on the same vertex count.
Graph graph_union(const Graph& g, const Graph& h);

struct DegeneracyResult {
    bool ok = false;
    std::vector<int> order;  // removal order; forward degree <= bound at each step
    VertexSet witness;       // on refusal: remaining vertices, all of degree > bound
};

/// Repeatedly removes a minimum-degree vertex while its degree stays within
/// bound. Succeeds iff g is bound-degenerate.
DegeneracyResult degeneracy_ordering(const Graph& g, int bound);

/// External neighborhood N_G(S): vertices outside s adjacent to some member.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Components as sorted vertex sets, ordered by minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// --- text format ---
// Graphs:   line "n m", then m lines "u v" with 0 <= u < v < n.
// Digraphs: line "n m", then m lines "u v" with u != v, ordered pairs.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);

}  // namespace rpg
