#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rpg/families.hpp"
#include "rpg/pipelines.hpp"
#include "rpg/random.hpp"

using namespace rpg;

namespace {

Graph disjoint_cliques(int count, int size) {
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < count; ++c)
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v)
                es.emplace_back(c * size + u, c * size + v);
    return Graph::from_edges(count * size, es);
}

}  // namespace

TEST_CASE("block linkage succeeds trivially on a complete seed") {
    auto g = Graph::complete(12);
    auto trace = block_linkage_hamiltonicity(g, Graph::empty(12), {});
    REQUIRE(trace.success);
    CHECK(trace.cycle.size() == 12);
    CHECK(verify_cycle(g, trace.cycle));
}

TEST_CASE("block linkage fails honestly without crossing edges") {
    auto g = disjoint_cliques(2, 10);
    auto trace = block_linkage_hamiltonicity(g, Graph::empty(20), {});
    CHECK_FALSE(trace.success);
    CHECK(trace.failure_stage == "aux-not-hamiltonian");
}

TEST_CASE("block linkage on perturbed triple cliques") {
    auto g = disjoint_cliques(3, 20);
    PipelineConfig cfg;
    cfg.seed = 9001;
    auto r = sample_gnp(60, 0.02, Seed{9001});
    auto trace = block_linkage_hamiltonicity(g, r, cfg);
    REQUIRE(trace.success);
    auto uni = graph_union(g, r);
    CHECK(trace.cycle.size() == 60);
    CHECK(verify_cycle(uni, trace.cycle));
    // conservativity: the exact solver agrees on the union
    CHECK(is_hamiltonian(uni).verdict == Verdict::Yes);
}

TEST_CASE("block linkage traces are deterministic") {
    auto g = disjoint_cliques(3, 20);
    PipelineConfig cfg;
    cfg.seed = 4321;
    auto r = sample_gnp(60, 0.02, Seed{4321});
    auto a = block_linkage_hamiltonicity(g, r, cfg);
    auto b = block_linkage_hamiltonicity(g, r, cfg);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("matched blocks on a clique forest") {
    FamilySpec cf{FamilyKind::CliqueForest, 60};
    cf.d = 19;
    cf.k = 3;
    auto g = build_family(cf);
    PipelineConfig cfg;
    cfg.seed = 2024;
    auto r = sample_gnp(60, 0.03, Seed{2024});
    auto trace = matched_blocks_hamiltonicity(g, r, cfg);
    REQUIRE(trace.success);
    auto uni = graph_union(g, r);
    CHECK(trace.cycle.size() == 60);
    CHECK(verify_cycle(uni, trace.cycle));
    CHECK(is_hamiltonian(uni).verdict == Verdict::Yes);
}

TEST_CASE("block linkage routes through many chunks on dense perturbations") {
    auto g = disjoint_cliques(2, 30);
    PipelineConfig cfg;
    cfg.seed = 501;
    auto r = sample_gnp(60, 0.2, Seed{501});
    auto trace = block_linkage_hamiltonicity(g, r, cfg);
    REQUIRE(trace.success);
    CHECK(verify_cycle(graph_union(g, r), trace.cycle));
    int chunks = 0;
    for (const auto& st : trace.stages)
        if (st.name == "sub-blocks") chunks = std::stoi(st.detail);
    CHECK(chunks > 2);  // the window chunking stays in force here
}

TEST_CASE("matched blocks routes small blocks through the matching") {
    // one block below the (overridden) threshold: forces the composite-node
    // route with the bipartite matching and the Hamilton path inside it
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) es.emplace_back(u, v);
    for (int c = 0; c < 2; ++c)
        for (int u = 0; u < 30; ++u)
            for (int v = u + 1; v < 30; ++v)
                es.emplace_back(4 + 30 * c + u, 4 + 30 * c + v);
    auto g = Graph::from_edges(64, es);

    int good = 0;
    for (int s = 0; s < 10; ++s) {
        PipelineConfig cfg;
        cfg.seed = 600 + s;
        cfg.small_block_threshold = 5.0;
        auto r = sample_gnp(64, 0.06, Seed{600 + static_cast<std::uint64_t>(s)});
        auto trace = matched_blocks_hamiltonicity(g, r, cfg);
        if (!trace.success) continue;
        if (trace.cycle.size() == 64 && verify_cycle(graph_union(g, r), trace.cycle)) ++good;
    }
    CHECK(good >= 8);
}

TEST_CASE("matched blocks fails honestly on a disconnected union") {
    auto g = disjoint_cliques(2, 12);
    auto trace = matched_blocks_hamiltonicity(g, Graph::empty(24), {});
    CHECK_FALSE(trace.success);
    CHECK((trace.failure_stage == "aux-not-hamiltonian" ||
           trace.failure_stage == "matching" || trace.failure_stage == "chunk-shortage"));
}

TEST_CASE("long cycle on perturbed m cliques") {
    FamilySpec mc{FamilyKind::MCliques, 60};
    mc.m = 4;
    auto g = build_family(mc);
    double p = 64.0 * 4 / 3600.0;
    PipelineConfig cfg;
    cfg.seed = 777;
    auto r = sample_gnp(60, p, Seed{777});
    auto trace = long_cycle_from_paths(g, r, 0.25, cfg);
    REQUIRE(trace.success);
    CHECK(static_cast<int>(trace.cycle.size()) >= 45);
    CHECK(verify_cycle(graph_union(g, r), trace.cycle));
    // assembly length accounting
    CHECK(static_cast<long long>(trace.cycle.size()) == trace.subpath_vertex_total);
}

TEST_CASE("long cycle trivially succeeds on a complete seed") {
    auto g = Graph::complete(30);
    auto trace = long_cycle_from_paths(g, Graph::empty(30), 0.3, {});
    REQUIRE(trace.success);
    CHECK(static_cast<int>(trace.cycle.size()) >= 21);
    CHECK(verify_cycle(g, trace.cycle));
}

TEST_CASE("long cycle fails honestly without random edges") {
    FamilySpec mc{FamilyKind::MCliques, 60};
    mc.m = 4;
    auto g = build_family(mc);
    auto trace = long_cycle_from_paths(g, Graph::empty(60), 0.25, {});
    CHECK_FALSE(trace.success);
    CHECK(trace.failure_stage == "short-cycle");
}

TEST_CASE("toughness experiment on unions") {
    CHECK(toughness_after_union(Graph::complete(10), Graph::empty(10), 1.0).verdict ==
          Verdict::Yes);

    FamilySpec iab{FamilyKind::IAB, 14};
    iab.k = 6;
    auto g = build_family(iab);
    auto v = toughness_after_union(g, Graph::empty(14), 1.0);
    CHECK(v.verdict == Verdict::No);
    CHECK(v.witness == VertexSet{5, 6, 7});  // the A attachment set

    CHECK(toughness_after_union(Graph::cycle(12), Graph::empty(12), 1.0).verdict ==
          Verdict::Yes);
    CHECK(toughness_after_union(Graph::cycle(12), Graph::empty(12), 1.0001).verdict ==
          Verdict::No);
}
