#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpg/checkers.hpp"
#include "rpg/graph.hpp"
#include "rpg/random.hpp"

namespace rpg {

struct PartitionBlock {
    VertexSet vertices;
    int verified_connectivity = 0;  // re-checked by vertex_connectivity, never assumed
};

enum class PartitionMethod { MinDegree, Independence };

struct PartitionResult {
    PartitionMethod method = PartitionMethod::MinDegree;
    std::vector<PartitionBlock> blocks;
};

struct PartitionOutcome {
    bool ok = false;
    PartitionResult partition;
    std::string failure;
    std::optional<int> stuck_vertex;
};

/// Greedy vertex set A with verified kappa(G[A]) >= target: peel low-degree
/// vertices, test the candidate, and descend into the largest piece behind a
/// too-small cut. nullopt when nothing qualifies.
std::optional<VertexSet> extract_highly_connected(const Graph& g, int target);

/// Partition driven by the minimum degree k: every block verified
/// k^2/(16n)-connected with at least k/8 vertices. Leftover vertices attach
/// to the first block where they have enough neighbors.
PartitionOutcome partition_by_min_degree(const Graph& g);

struct IndependencePartitionParams {
    double delta = 0;              // minimum degree of the input
    int alpha_bound = 0;           // caller-supplied independence bound
    double log_n = 0;              // natural log
    double extraction_conn = 0;    // delta / log n
    double block_conn_target = 0;  // delta / (20 alpha log n)
    double attach_threshold = 0;   // delta / (20 alpha log n)
    double degeneracy_bound = 0;   // 4 delta / log n
};

struct IndependencePartitionConclusions {
    bool block_count_ok = false;  // t <= 19 alpha log n
    bool large_cover_ok = false;  // blocks of size >= 0.1 n/alpha cover >= n/2
    bool block_size_ok = false;   // every |V_i| >= delta/log n
    bool connectivity_ok = false; // every kappa(G[V_i]) >= delta/(20 alpha log n)
    std::string violation;

    bool all() const {
        return block_count_ok && large_cover_ok && block_size_ok && connectivity_ok;
    }
};

struct IndependencePartitionResult {
    bool ok = false;
    PartitionResult partition;
    std::vector<int> large_blocks;  // indexes of blocks with >= 0.1 n/alpha vertices
    IndependencePartitionParams params;
    IndependencePartitionConclusions conclusions;
    std::string failure;
    std::optional<int> stuck_vertex;
};

/// Partition driven by an independence bound: repeated extraction of
/// (delta/log n)-connected sets, degeneracy ordering of the remainder, and
/// greedy reattachment to the first block with enough neighbors. All four
/// size/count/connectivity conclusions are verified by exact checkers.
IndependencePartitionResult partition_by_independence(const Graph& g, int alpha_bound);

struct BisectionResult {
    bool ok = false;
    VertexSet side1, side2;
    int attempts_used = 0;
    int kappa = 0;  // connectivity of the input graph
    std::string failure;
};

/// Random equiprobable bisections, resampled until both halves are verified
/// kappa/8-connected and every vertex keeps >= kappa/4 neighbors per side.
BisectionResult connectivity_bisection(const Graph& g, int retries, Seed seed);

struct EndpointPair {
    int from = -1;
    int to = -1;
};

struct PathSystem {
    std::vector<std::vector<int>> paths;  // paths[i] runs from pairs[i].from to .to
    std::vector<EndpointPair> endpoints;
};

struct PathSystemResult {
    Verdict verdict = Verdict::Indeterminate;
    PathSystem system;
    std::string stage;  // failing stage tag when not Yes
};

/// Pairwise vertex-disjoint paths with pinned endpoints (not spanning).
/// Exhaustive backtracking; No is a proof of absence, Indeterminate means
/// the budget ran out.
PathSystemResult disjoint_paths(const Graph& g, const std::vector<EndpointPair>& pairs,
                                const SearchBudget& budget = {});

struct SpanningOptions {
    double connectivity_factor = 1.0;  // scales the kappa precondition
    Seed seed{0x5eed5eedULL};
    int bisection_retries = 64;
    SearchBudget budget;
    CheckerCaps caps;
};

/// Vertex-disjoint paths with pinned endpoints covering every vertex.
/// Routes the first r-1 pairs inside one verified half, finishes with a
/// Hamilton path in the remainder, and falls back to exhaustive search for
/// n <= 20.
PathSystemResult spanning_path_system(const Graph& g, const std::vector<EndpointPair>& pairs,
                                      const SpanningOptions& opts = {});

bool verify_path_system(const Graph& host, const PathSystem& system, bool require_spanning,
                        std::string* why = nullptr);

}  // namespace rpg
