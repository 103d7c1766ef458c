#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rpg/checkers.hpp"
#include "rpg/families.hpp"
#include "rpg/random.hpp"

using namespace rpg;

namespace {

Graph seeded_graph(int n, double p, std::uint64_t seed) {
    return sample_gnp(n, p, Seed{seed});
}

// random graph with minimum degree forced to at least n/2
Graph dirac_graph(int n, std::uint64_t seed) {
    auto g = seeded_graph(n, 0.55, seed);
    int need = (n + 1) / 2;
    for (;;) {
        int worst = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(worst)) worst = v;
        if (g.degree(worst) >= need) break;
        auto es = g.edges();
        for (int u = 0; u < n; ++u)
            if (u != worst && !g.has_edge(worst, u)) {
                es.emplace_back(std::min(worst, u), std::max(worst, u));
                break;
            }
        g = Graph::from_edges(n, es);
    }
    return g;
}

}  // namespace

TEST_CASE("independence number matches enumeration and fixed values") {
    CHECK(independence_number(Graph::cycle(5)).alpha == 2);
    CHECK(independence_number(Graph::complete_bipartite(3, 5)).alpha == 5);
    auto pet = independence_number(oracle::petersen());
    CHECK(pet.alpha == 4);
    // witness is independent
    for (size_t i = 0; i < pet.witness.size(); ++i)
        for (size_t j = i + 1; j < pet.witness.size(); ++j)
            CHECK_FALSE(oracle::petersen().has_edge(pet.witness[i], pet.witness[j]));

    for (int t = 0; t < 60; ++t) {
        auto g = seeded_graph(3 + t % 6, 0.4, 7000 + t);
        CHECK(independence_number(g).alpha == oracle::independence_number(g));
    }

    // many-clique families: the clique-cover bound keeps these instant
    FamilySpec cf{FamilyKind::CliqueForest, 96};
    cf.d = 5;
    cf.k = 16;
    CHECK(independence_number(build_family(cf)).alpha == 16);
    FamilySpec cf2{FamilyKind::CliqueForest, 120};
    cf2.d = 9;
    cf2.k = 12;
    CHECK(independence_number(build_family(cf2)).alpha == 12);
}

TEST_CASE("vertex connectivity matches enumeration and fixed values") {
    auto k6 = vertex_connectivity(Graph::complete(6));
    CHECK(k6.kappa == 5);
    CHECK(k6.complete);
    CHECK(vertex_connectivity(Graph::cycle(8)).kappa == 2);
    CHECK(vertex_connectivity(oracle::petersen()).kappa == 3);

    for (int t = 0; t < 60; ++t) {
        auto g = seeded_graph(3 + t % 6, 0.45, 8000 + t);
        auto r = vertex_connectivity(g);
        CHECK(r.kappa == oracle::vertex_connectivity(g));
        if (!r.complete && r.kappa > 0) {
            // the reported cut has exactly kappa vertices and disconnects
            std::vector<char> removed(g.vertex_count(), 0);
            for (int v : r.cut) removed[v] = 1;
            CHECK(static_cast<int>(r.cut.size()) == r.kappa);
            CHECK(oracle::components_after_removal(g, removed) >= 2);
        }
    }

    // cuts stay on vertices even when the tight spot is a single bridge
    for (int t = 0; t < 30; ++t) {
        auto g = seeded_graph(14, 0.18, 8200 + t);
        auto r = vertex_connectivity(g);
        if (r.complete || r.kappa == 0) continue;
        CHECK_FALSE(r.cut.empty());
        std::vector<char> removed(g.vertex_count(), 0);
        for (int v : r.cut) removed[v] = 1;
        CHECK(oracle::components_after_removal(g, removed) >= 2);
    }
}

TEST_CASE("hamiltonicity on fixed graphs") {
    for (int n : {3, 5, 8, 12}) {
        auto r = is_hamiltonian(Graph::cycle(n));
        CHECK(r.verdict == Verdict::Yes);
        CHECK(verify_cycle(Graph::cycle(n), r.cycle));
    }
    CHECK(is_hamiltonian(Graph::complete_bipartite(3, 4)).verdict == Verdict::No);
    CHECK(is_hamiltonian(oracle::petersen()).verdict == Verdict::No);
    CHECK_THROWS_AS(is_hamiltonian(Graph::complete(2)), std::invalid_argument);
}

TEST_CASE("hamiltonicity agrees with permutation brute force") {
    for (int t = 0; t < 120; ++t) {
        auto g = seeded_graph(3 + t % 6, 0.5, 9000 + t);
        auto r = is_hamiltonian(g);
        REQUIRE(r.verdict != Verdict::Indeterminate);
        CHECK((r.verdict == Verdict::Yes) == oracle::hamiltonian(g));
        if (r.verdict == Verdict::Yes) {
            CHECK(static_cast<int>(r.cycle.size()) == g.vertex_count());
            CHECK(verify_cycle(g, r.cycle));
        }
    }
}

TEST_CASE("hamilton paths between endpoints") {
    auto p4 = Graph::path(4);
    CHECK(hamilton_path_between(p4, 0, 3).verdict == Verdict::Yes);
    CHECK(hamilton_path_between(p4, 1, 2).verdict == Verdict::No);
    CHECK(hamilton_path_between(Graph::complete(4), 1, 3).verdict == Verdict::Yes);
    CHECK_THROWS_AS(hamilton_path_between(p4, 2, 2), std::invalid_argument);

    for (int t = 0; t < 60; ++t) {
        int n = 4 + t % 4;
        auto g = seeded_graph(n, 0.5, 10000 + t);
        int u = t % n, v = (t + 1 + t % (n - 1)) % n;
        if (u == v) continue;
        auto r = hamilton_path_between(g, u, v);
        REQUIRE(r.verdict != Verdict::Indeterminate);
        CHECK((r.verdict == Verdict::Yes) == oracle::hamilton_path(g, u, v));
        if (r.verdict == Verdict::Yes) {
            CHECK(r.path.front() == u);
            CHECK(r.path.back() == v);
            CHECK(verify_path(g, r.path));
            CHECK(static_cast<int>(r.path.size()) == n);
        }
    }
}

TEST_CASE("hamilton connectivity") {
    CHECK(is_hamilton_connected(Graph::complete(4)).verdict == Verdict::Yes);
    auto c5 = is_hamilton_connected(Graph::cycle(5));
    CHECK(c5.verdict == Verdict::No);
    CHECK(is_hamilton_connected(Graph::complete_bipartite(3, 3)).verdict == Verdict::No);
}

TEST_CASE("pancyclicity reports") {
    auto k5 = pancyclicity_report(Graph::complete(5));
    CHECK(k5.pancyclic() == Verdict::Yes);
    CHECK(k5.present_lengths == std::vector<int>{3, 4, 5});

    auto k44 = pancyclicity_report(Graph::complete_bipartite(4, 4));
    CHECK(k44.pancyclic() == Verdict::No);
    CHECK(k44.missing_lengths == std::vector<int>{3, 5, 7});

    // wheel: hub joined to a 5-cycle
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 5; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(i, i == 5 ? 1 : i + 1);
    }
    auto wheel = Graph::from_edges(6, es);
    CHECK(pancyclicity_report(wheel).pancyclic() == Verdict::Yes);

    for (int t = 0; t < 40; ++t) {
        auto g = seeded_graph(4 + t % 5, 0.5, 11000 + t);
        auto rep = pancyclicity_report(g);
        auto truth = oracle::cycle_lengths(g);
        std::set<int> got(rep.present_lengths.begin(), rep.present_lengths.end());
        CHECK(got == truth);
        CHECK(rep.indeterminate_lengths.empty());
        for (const auto& [len, cert] : rep.certificates) {
            CHECK(static_cast<int>(cert.size()) == len);
            CHECK(verify_cycle(g, cert));
        }
    }
}

TEST_CASE("circumference") {
    auto tree = Graph::path(7);
    auto t = circumference(tree);
    CHECK(t.length == 0);
    CHECK(t.exact == Verdict::Yes);
    CHECK(t.witness.empty());

    CHECK(circumference(oracle::petersen()).length == 9);

    auto c7 = Graph::cycle(7);
    auto es = c7.edges();
    es.emplace_back(0, 3);
    CHECK(circumference(Graph::from_edges(7, es)).length == 7);

    for (int tr = 0; tr < 60; ++tr) {
        auto g = seeded_graph(3 + tr % 6, 0.45, 12000 + tr);
        auto r = circumference(g);
        CHECK(r.exact == Verdict::Yes);
        CHECK(r.length == oracle::circumference(g));
        if (r.length >= 3) CHECK(verify_cycle(g, r.witness));
    }
}

TEST_CASE("directed cycles") {
    std::vector<std::pair<int, int>> ring;
    for (int i = 0; i < 7; ++i) ring.emplace_back(i, (i + 1) % 7);
    auto d = Digraph::from_arcs(7, ring);
    auto r = directed_hamilton_cycle(d);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(verify_directed_cycle(d, r.cycle));

    CHECK(directed_hamilton_cycle(Digraph::complete(6)).verdict == Verdict::Yes);

    auto dag = Digraph::from_arcs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(directed_hamilton_cycle(dag).verdict == Verdict::No);
    auto lc = longest_directed_cycle(dag);
    CHECK(lc.length == 0);
    CHECK(lc.exact == Verdict::Yes);

    auto two_triangles =
        Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(longest_directed_cycle(two_triangles).length == 3);
    CHECK(longest_directed_cycle(Digraph::complete(6)).length == 6);

    auto two_cycle = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(longest_directed_cycle(two_cycle).length == 2);
}

TEST_CASE("directed searches agree with exhaustive enumeration") {
    for (int t = 0; t < 120; ++t) {
        int n = 3 + t % 5;
        auto d = sample_dnp(n, 0.35, Seed{22000 + static_cast<std::uint64_t>(t)});
        auto lc = longest_directed_cycle(d);
        REQUIRE(lc.exact == Verdict::Yes);
        int truth = oracle::longest_directed_cycle_len(d);
        CHECK(lc.length == truth);
        if (lc.length >= 2) CHECK(verify_directed_cycle(d, lc.witness));
        auto ham = directed_hamilton_cycle(d);
        REQUIRE(ham.verdict != Verdict::Indeterminate);
        CHECK((ham.verdict == Verdict::Yes) == (truth == n));
        if (ham.verdict == Verdict::Yes) CHECK(verify_directed_cycle(d, ham.cycle));
    }
}

TEST_CASE("pancyclicity past the spectrum cap") {
    // dense case: chord derivation resolves every length
    auto dense = sample_gnp(26, 0.6, Seed{4040});
    auto rep = pancyclicity_report(dense);
    CHECK(rep.pancyclic() == Verdict::Yes);
    for (const auto& [len, cert] : rep.certificates) {
        CHECK(static_cast<int>(cert.size()) == len);
        CHECK(verify_cycle(dense, cert));
    }

    // girth refutations: a bare cycle has exactly one length
    auto ring = pancyclicity_report(Graph::cycle(26));
    CHECK(ring.present_lengths == std::vector<int>{26});
    CHECK(ring.missing_lengths.size() == 23);
    CHECK(ring.indeterminate_lengths.empty());

    // parity refutations: balanced complete bipartite misses every odd length
    auto kb = pancyclicity_report(Graph::complete_bipartite(13, 13));
    CHECK(kb.pancyclic() == Verdict::No);
    for (int len : kb.missing_lengths) CHECK(len % 2 == 1);
    for (int len = 3; len <= 25; len += 2) {
        bool listed = std::find(kb.missing_lengths.begin(), kb.missing_lengths.end(), len) !=
                      kb.missing_lengths.end();
        CHECK(listed);
    }
}

TEST_CASE("toughness exact and bounded") {
    auto c6 = toughness_exact(Graph::cycle(6));
    CHECK(c6.separable);
    CHECK(c6.witness_size == c6.component_count);  // toughness exactly 1

    auto k34 = toughness_exact(Graph::complete_bipartite(3, 4));
    CHECK(k34.witness_size == 3);
    CHECK(k34.component_count == 4);
    CHECK(k34.witness == VertexSet{0, 1, 2});

    CHECK_FALSE(toughness_exact(Graph::complete(5)).separable);

    CHECK(toughness_at_least(Graph::cycle(6), 1.0).verdict == Verdict::Yes);
    auto v = toughness_at_least(Graph::cycle(6), 1.01);
    CHECK(v.verdict == Verdict::No);
    CHECK_FALSE(v.violator.empty());

    for (int t = 0; t < 40; ++t) {
        auto g = seeded_graph(4 + t % 5, 0.5, 13000 + t);
        auto mine = toughness_exact(g);
        auto truth = oracle::toughness(g);
        CHECK(mine.separable == truth.separable);
        if (mine.separable)
            CHECK(mine.witness_size * truth.comps == truth.size * mine.component_count);
    }
}

TEST_CASE("hamiltonian implies 1-tough") {
    for (int t = 0; t < 80; ++t) {
        auto g = seeded_graph(4 + t % 5, 0.5, 14000 + t);
        if (is_hamiltonian(g).verdict != Verdict::Yes) continue;
        auto tough = toughness_exact(g);
        if (tough.separable) CHECK(tough.witness_size >= tough.component_count);
    }
}

TEST_CASE("minimum degree n/2 forces a Hamilton cycle and pancyclicity") {
    for (int t = 0; t < 30; ++t) {
        int n = 3 + t % 10;
        auto g = dirac_graph(n, 15000 + t);
        CHECK(is_hamiltonian(g).verdict == Verdict::Yes);
        auto rep = pancyclicity_report(g);
        bool exceptional = is_balanced_complete_bipartite(g);
        CHECK((rep.pancyclic() == Verdict::Yes || exceptional));
    }
    // the exceptional graph itself
    auto kb = build_family({FamilyKind::DiracBipartite, 10});
    CHECK(is_hamiltonian(kb).verdict == Verdict::Yes);
    CHECK(is_balanced_complete_bipartite(kb));
    CHECK(pancyclicity_report(kb).pancyclic() == Verdict::No);
    CHECK_FALSE(is_balanced_complete_bipartite(Graph::complete(6)));
}

TEST_CASE("connectivity above independence forces Hamilton connectivity") {
    for (int t = 0; t < 40; ++t) {
        int n = 4 + t % 7;
        auto g = seeded_graph(n, 0.7, 16000 + t);
        if (vertex_connectivity(g).kappa <= independence_number(g).alpha) continue;
        CHECK(is_hamilton_connected(g).verdict == Verdict::Yes);
    }
}

TEST_CASE("bipartite matching") {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 5; ++v) all.emplace_back(u, v);
    CHECK(bipartite_max_matching(3, 5, all).size == 3);
    CHECK(bipartite_max_matching(4, 4, {}).size == 0);

    auto m = bipartite_max_matching(3, 3, {{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    CHECK(m.size == 2);
    for (auto [u, v] : m.pairs) {
        CHECK(u >= 0);
        CHECK(v >= 0);
    }
}

TEST_CASE("expander check") {
    CHECK(expander_check(Graph::complete(9), 3, 2.0).ok);
    auto two_k4 = graph_union(Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                              Graph::from_edges(8, {{4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}));
    CHECK(expander_check(two_k4, 1, 2.0).ok);
    auto bad = expander_check(two_k4, 4, 2.0);
    CHECK_FALSE(bad.ok);
    // smallest violator: {0,1} already has only two external neighbors
    CHECK(bad.violator == VertexSet{0, 1});
    CHECK(neighborhood(two_k4, {0, 1, 2, 3}).empty());  // the whole clique violates too
    CHECK_THROWS_AS(expander_check(Graph::complete(60), 30, 1.0, 1000), CapacityError);
}

TEST_CASE("greedy cycle cover") {
    auto triangles = Graph::from_edges(
        9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}});
    auto cover = cycle_cover_greedy(triangles);
    CHECK(cover.cycles.size() == 3);
    CHECK(cover.uncovered.empty());
    CHECK(cover.quantity() == 3);

    auto tree = Graph::path(6);
    auto tc = cycle_cover_greedy(tree);
    CHECK(tc.cycles.empty());
    CHECK(tc.quantity() == 6);

    auto c9 = cycle_cover_greedy(Graph::cycle(9));
    CHECK(c9.cycles.size() == 1);
    CHECK(c9.quantity() == 1);
    for (const auto& cyc : c9.cycles) CHECK(verify_cycle(Graph::cycle(9), cyc));

    // beyond the exact-search cap the greedy still covers cycle by cycle
    std::vector<std::pair<int, int>> big;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 50; ++i) big.emplace_back(50 * c + std::min(i, (i + 1) % 50),
                                                      50 * c + std::max(i, (i + 1) % 50));
    auto two_rings = Graph::from_edges(100, big);
    auto cover100 = cycle_cover_greedy(two_rings);
    CHECK(cover100.quantity() == 2);
    for (const auto& cyc : cover100.cycles) CHECK(verify_cycle(two_rings, cyc));
}

TEST_CASE("perfect matching existence") {
    CHECK(has_perfect_matching(Graph::cycle(6)) == Verdict::Yes);
    CHECK(has_perfect_matching(Graph::cycle(5)) == Verdict::No);
    CHECK(has_perfect_matching(Graph::complete(4)) == Verdict::Yes);
    CHECK(has_perfect_matching(Graph::path(4)) == Verdict::Yes);
    CHECK(has_perfect_matching(Graph::complete_bipartite(1, 3)) == Verdict::No);
    auto two_triangles =
        Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(has_perfect_matching(two_triangles) == Verdict::No);
}

TEST_CASE("certificate verification rejects bad witnesses") {
    auto k5 = Graph::complete(5);
    CHECK(verify_cycle(k5, {0, 1, 2, 3, 4}));
    std::string why;
    CHECK_FALSE(verify_cycle(Graph::cycle(5), {0, 1, 2, 3}, &why));  // 3-0 not an edge
    CHECK_FALSE(verify_cycle(k5, {0, 1, 2, 2}, &why));
    CHECK_FALSE(verify_cycle(k5, {0, 1}, &why));
    CHECK(verify_path(k5, {3, 1, 4}));
    CHECK_FALSE(verify_path(Graph::path(4), {0, 2}, &why));
}

TEST_CASE("budget exhaustion reports indeterminate") {
    // dense non-Hamiltonian-looking instance too large for the DP path,
    // nearly no budget: must come back indeterminate, never a false verdict
    auto g = sample_gnp(30, 0.5, Seed{171717});
    if (degree_stats(g).min_degree >= 2) {
        auto r = is_hamiltonian(g, SearchBudget{1}, CheckerCaps{});
        CHECK(r.verdict != Verdict::No);
    }
}
