#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rpg/checkers.hpp"
#include "rpg/families.hpp"

using namespace rpg;

namespace {

void check_predictions(const FamilySpec& spec) {
    auto g = build_family(spec);
    auto pred = predicted_properties(spec);
    CAPTURE(family_to_json(spec));
    CHECK(g.vertex_count() == spec.n);
    CHECK(degree_stats(g).min_degree == pred.min_degree);
    CHECK(static_cast<int>(connected_components(g).size()) == pred.component_count);
    CHECK(independence_number(g).alpha == pred.independence_number);
}

}  // namespace

TEST_CASE("two cliques") {
    FamilySpec spec{FamilyKind::TwoCliques, 9};
    auto g = build_family(spec);
    auto blocks = family_blocks(spec);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].size() == 4);
    CHECK(blocks[1].size() == 5);
    CHECK(degree_stats(g).min_degree == 3);
    CHECK(independence_number(g).alpha == 2);
    CHECK(connected_components(g).size() == 2);
    auto pred = predicted_properties(spec);
    CHECK(pred.min_degree == 3);
    CHECK(pred.independence_number == 2);
    CHECK(pred.component_count == 2);
}

TEST_CASE("independent-set-attachment family") {
    FamilySpec spec{FamilyKind::IAB, 10};
    spec.k = 4;
    auto g = build_family(spec);
    auto blocks = family_blocks(spec);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].size() == 3);  // I
    CHECK(blocks[1].size() == 2);  // A
    CHECK(blocks[2].size() == 5);  // B
    CHECK(degree_stats(g).min_degree == 2);
    CHECK(oracle::independence_number(g) == 4);
    CHECK(independence_number(g).alpha == 4);
    CHECK(connected_components(g).size() == 1);

    // deleting A splits I and B into k components
    VertexSet keep;
    for (int v : blocks[0]) keep.push_back(v);
    for (int v : blocks[2]) keep.push_back(v);
    auto rest = induced(g, keep);
    CHECK(connected_components(rest.graph).size() == 4);
}

TEST_CASE("clique forest") {
    FamilySpec spec{FamilyKind::CliqueForest, 20};
    spec.d = 3;
    spec.k = 4;
    auto blocks = family_blocks(spec);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].size() == 4);
    CHECK(blocks[3].size() == 8);
    check_predictions(spec);
}

TEST_CASE("m cliques") {
    FamilySpec spec{FamilyKind::MCliques, 10};
    spec.m = 3;
    auto blocks = family_blocks(spec);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].size() == 3);
    CHECK(blocks[2].size() == 4);
    auto pred = predicted_properties(spec);
    CHECK(pred.min_degree == 2);
    CHECK(pred.independence_number == 3);
    CHECK(pred.component_count == 3);
    check_predictions(spec);
}

TEST_CASE("predictions match exact checkers across the grid") {
    std::vector<FamilySpec> specs;
    specs.push_back({FamilyKind::TwoCliques, 9});
    specs.push_back({FamilyKind::TwoCliques, 40});
    {
        FamilySpec s{FamilyKind::BalancedCliques, 60};
        s.delta = 0.3;  // k = 3, cliques of 20 >= 19
        specs.push_back(s);
    }
    {
        FamilySpec s{FamilyKind::CliqueForest, 60};
        s.d = 5;
        s.k = 10;
        specs.push_back(s);
    }
    {
        FamilySpec s{FamilyKind::ToughnessCliques, 30};
        s.k = 4;
        s.c = 1.0;
        specs.push_back(s);
    }
    {
        FamilySpec s{FamilyKind::IAB, 14};
        s.k = 6;
        specs.push_back(s);
    }
    specs.push_back({FamilyKind::UnbalancedBipartite, 12});
    {
        FamilySpec s{FamilyKind::MCliques, 60};
        s.m = 4;
        specs.push_back(s);
    }
    specs.push_back({FamilyKind::DiracBipartite, 12});
    for (const auto& s : specs) check_predictions(s);
}

TEST_CASE("connectivity pattern per kind") {
    CHECK(connected_components(build_family({FamilyKind::TwoCliques, 11})).size() == 2);
    FamilySpec mc{FamilyKind::MCliques, 12};
    mc.m = 4;
    CHECK(connected_components(build_family(mc)).size() == 4);
    FamilySpec iab{FamilyKind::IAB, 12};
    iab.k = 5;
    CHECK(is_connected(build_family(iab)));
    FamilySpec tc{FamilyKind::ToughnessCliques, 24};
    tc.k = 3;
    tc.c = 1.2;
    CHECK_FALSE(is_connected(build_family(tc)));
    CHECK(is_connected(build_family({FamilyKind::UnbalancedBipartite, 9})));
}

TEST_CASE("infeasible specs are rejected with the constraint named") {
    FamilySpec cf{FamilyKind::CliqueForest, 10};
    cf.d = 4;
    cf.k = 3;  // 3*5 > 10
    CHECK_THROWS_WITH_AS(build_family(cf), doctest::Contains("k*(d+1)"),
                         std::invalid_argument);

    FamilySpec bc{FamilyKind::BalancedCliques, 60};
    bc.delta = 0.2;  // cliques of 12 < 0.2*60+1
    CHECK_THROWS_AS(build_family(bc), std::invalid_argument);

    FamilySpec db{FamilyKind::DiracBipartite, 9};
    CHECK_THROWS_AS(build_family(db), std::invalid_argument);
}

TEST_CASE("json round trip") {
    FamilySpec s{FamilyKind::CliqueForest, 60};
    s.d = 5;
    s.k = 10;
    auto t = family_from_json(family_to_json(s));
    CHECK(t.kind == s.kind);
    CHECK(t.n == s.n);
    CHECK(t.d == s.d);
    CHECK(t.k == s.k);
    CHECK_THROWS_AS(family_kind_from_name("NoSuchFamily"), std::invalid_argument);
}
