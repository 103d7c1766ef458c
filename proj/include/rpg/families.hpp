#pragma once

#include <string>
#include <vector>

#include "rpg/graph.hpp"

namespace rpg {

/// Deterministic seed-graph constructions. Each is a disjoint-clique or
/// bipartite pattern whose minimum degree, independence number and component
/// count are known in closed form.
enum class FamilyKind {
    TwoCliques,          // K_floor(n/2) + K_ceil(n/2)
    BalancedCliques,     // k = round(1/delta) near-equal cliques, smallest >= delta*n+1
    CliqueForest,        // k-1 cliques of size d+1 plus one on the rest
    ToughnessCliques,    // r = min(floor(c k), floor(n/(k+1))) - 1 cliques of k+1 plus the rest
    IAB,                 // independent set I joined to A, clique on A+B
    UnbalancedBipartite, // K_{floor(n/3), n-floor(n/3)}
    MCliques,            // m near-equal cliques
    DiracBipartite,      // K_{n/2,n/2}, n even
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::TwoCliques;
    int n = 0;
    int k = 0;
    int d = 0;
    int m = 0;
    double delta = 0.0;
    double c = 0.0;
};

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// Canonical labeled construction. Blocks occupy consecutive labels; clique
/// families order blocks smallest first; IAB labels I, then A, then B;
/// bipartite families label the smaller part first.
/// Throws std::invalid_argument naming the violated constraint.
Graph build_family(const FamilySpec& spec);

/// Canonical block ranges of the construction (cliques, or I/A/B, or the
/// two bipartition sides), in label order.
std::vector<VertexSet> family_blocks(const FamilySpec& spec);

struct PredictedProperties {
    int min_degree = 0;
    int independence_number = 0;
    int component_count = 0;
    std::string notes;
};

/// Closed-form predictions for the construction; exact checkers reproduce
/// these on the generated graph.
PredictedProperties predicted_properties(const FamilySpec& spec);

std::string family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const std::string& text);

}  // namespace rpg
