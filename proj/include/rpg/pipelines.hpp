#pragma once

#include <string>
#include <vector>

#include "rpg/checkers.hpp"
#include "rpg/decompose.hpp"
#include "rpg/graph.hpp"

namespace rpg {

struct PipelineConfig {
    double delta_ratio = 0.0;            // 0: derive from the seed's min degree
    double epsilon = 0.25;               // long-cycle pipeline only
    double linkage_factor = 1.0;         // scales the spanning precondition
    double pancyclic_alpha_factor = 1.0; // run induced pancyclicity when alpha <= c*sqrt(n)
    int alpha_bound = 0;                 // 0: compute exactly
    int max_attempts = 24;               // deterministic re-split / orientation retries
    bool allow_coarsening = true;        // density-driven chunk coarsening
    double small_block_threshold = 0.0;  // 0: n / (100 alpha log n)
    int bisection_retries = 64;
    SearchBudget budget;
    CheckerCaps caps;
    std::uint64_t seed = 0;
};

struct StageRecord {
    std::string name;
    std::string status;  // "ok" / "fail" / "skip"
    std::string detail;
};

struct PipelineTrace {
    std::string pipeline;
    bool success = false;
    std::string failure_stage;
    std::vector<StageRecord> stages;
    std::vector<std::string> warnings;
    std::vector<int> cycle;  // verified in union(g, r) on success

    // long-cycle accounting: cycle vertices == sum of retained subpath
    // vertices; edge count == subpath edges + aux arcs used
    int target_length = 0;
    long long subpath_vertex_total = 0;
    int aux_arcs_used = 0;

    bool induced_report_ran = false;
    PancyclicityReport induced_report;

    std::string to_json() const;
};

/// Hamiltonicity via highly connected blocks: partition the seed by minimum
/// degree, chunk blocks, build the auxiliary digraph whose arcs are realized
/// random edges between chunk halves, find a directed Hamilton cycle, then
/// span each block with endpoint-pinned disjoint paths.
PipelineTrace block_linkage_hamiltonicity(const Graph& g, const Graph& r,
                                          const PipelineConfig& cfg = {});

/// Sparse variant: partition by an independence bound, match small blocks
/// into chunks of large blocks through random edges, route composite nodes
/// through Hamilton paths of the small blocks, then assemble as above.
PipelineTrace matched_blocks_hamiltonicity(const Graph& g, const Graph& r,
                                           const PipelineConfig& cfg = {});

/// Nearly spanning cycle: harvest vertex-disjoint paths from the seed,
/// connect path endpoints through random edges in an auxiliary digraph, and
/// splice the longest directed cycle into a long cycle of the union.
PipelineTrace long_cycle_from_paths(const Graph& g, const Graph& r, double epsilon,
                                    const PipelineConfig& cfg = {});

struct ToughnessVerdict {
    Verdict verdict = Verdict::Indeterminate;
    VertexSet witness;  // violating separator when verdict == No
};

/// Decides t-toughness of union(g, r) exactly at desk scale.
ToughnessVerdict toughness_after_union(const Graph& g, const Graph& r, double t,
                                       const CheckerCaps& caps = {});

}  // namespace rpg
