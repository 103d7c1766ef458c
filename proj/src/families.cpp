#include "rpg/families.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace rpg {

namespace {

using ordered_json = nlohmann::ordered_json;

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("family: " + what);
}

// Near-equal split of n into k parts, ascending.
std::vector<int> equal_split(int n, int k) {
    std::vector<int> sizes;
    int q = n / k, r = n % k;
    for (int i = 0; i < k - r; ++i) sizes.push_back(q);
    for (int i = 0; i < r; ++i) sizes.push_back(q + 1);
    return sizes;
}

std::vector<int> block_sizes(const FamilySpec& s) {
    switch (s.kind) {
        case FamilyKind::TwoCliques:
            require(s.n >= 2, "TwoCliques needs n >= 2");
            return {s.n / 2, s.n - s.n / 2};
        case FamilyKind::BalancedCliques: {
            require(s.n >= 1, "BalancedCliques needs n >= 1");
            require(s.delta > 0.0 && s.delta < 1.0, "BalancedCliques needs 0 < delta < 1");
            int k = static_cast<int>(std::floor(1.0 / s.delta + 0.5));
            require(k >= 2, "BalancedCliques needs k = round(1/delta) >= 2");
            require(k <= s.n, "BalancedCliques needs round(1/delta) <= n");
            auto sizes = equal_split(s.n, k);
            require(static_cast<double>(sizes.front()) >= s.delta * s.n + 1.0,
                    "BalancedCliques needs smallest clique >= delta*n + 1");
            return sizes;
        }
        case FamilyKind::CliqueForest: {
            require(s.d >= 1, "CliqueForest needs d >= 1");
            require(s.k >= 2, "CliqueForest needs k >= 2");
            require(static_cast<long long>(s.k) * (s.d + 1) <= s.n,
                    "CliqueForest needs k*(d+1) <= n");
            std::vector<int> sizes(s.k - 1, s.d + 1);
            sizes.push_back(s.n - (s.k - 1) * (s.d + 1));
            return sizes;
        }
        case FamilyKind::ToughnessCliques: {
            require(s.k >= 1, "ToughnessCliques needs k >= 1");
            require(s.c > 0.0, "ToughnessCliques needs c > 0");
            long long by_c = static_cast<long long>(std::floor(s.c * s.k));
            long long by_n = s.n / (s.k + 1);
            int r = static_cast<int>(std::min(by_c, by_n)) - 1;
            require(r >= 1, "ToughnessCliques needs min(floor(c*k), floor(n/(k+1))) >= 2");
            std::vector<int> sizes(r, s.k + 1);
            sizes.push_back(s.n - r * (s.k + 1));
            return sizes;
        }
        case FamilyKind::IAB: {
            require(s.k >= 2, "IAB needs k >= 2");
            int i = s.k - 1, a = (s.k + 1) / 2;
            require(s.n >= i + a + 1, "IAB needs n >= |I| + |A| + 1");
            return {i, a, s.n - i - a};
        }
        case FamilyKind::UnbalancedBipartite:
            require(s.n >= 3, "UnbalancedBipartite needs n >= 3");
            return {s.n / 3, s.n - s.n / 3};
        case FamilyKind::MCliques:
            require(s.m >= 1 && s.m <= s.n, "MCliques needs 1 <= m <= n");
            return equal_split(s.n, s.m);
        case FamilyKind::DiracBipartite:
            require(s.n >= 2 && s.n % 2 == 0, "DiracBipartite needs even n >= 2");
            return {s.n / 2, s.n / 2};
    }
    throw std::invalid_argument("family: unknown kind");
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::TwoCliques: return "TwoCliques";
        case FamilyKind::BalancedCliques: return "BalancedCliques";
        case FamilyKind::CliqueForest: return "CliqueForest";
        case FamilyKind::ToughnessCliques: return "ToughnessCliques";
        case FamilyKind::IAB: return "IAB";
        case FamilyKind::UnbalancedBipartite: return "UnbalancedBipartite";
        case FamilyKind::MCliques: return "MCliques";
        case FamilyKind::DiracBipartite: return "DiracBipartite";
    }
    throw std::invalid_argument("family: unknown kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    for (FamilyKind k : {FamilyKind::TwoCliques, FamilyKind::BalancedCliques,
                         FamilyKind::CliqueForest, FamilyKind::ToughnessCliques, FamilyKind::IAB,
                         FamilyKind::UnbalancedBipartite, FamilyKind::MCliques,
                         FamilyKind::DiracBipartite})
        if (family_kind_name(k) == name) return k;
    throw std::invalid_argument("family: unknown kind name '" + name + "'");
}

std::vector<VertexSet> family_blocks(const FamilySpec& spec) {
    auto sizes = block_sizes(spec);
    std::vector<VertexSet> blocks;
    int base = 0;
    for (int s : sizes) {
        VertexSet b(s);
        for (int i = 0; i < s; ++i) b[i] = base + i;
        base += s;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Graph build_family(const FamilySpec& spec) {
    auto blocks = family_blocks(spec);
    std::vector<std::pair<int, int>> es;
    auto add_clique = [&](const VertexSet& b) {
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) es.emplace_back(b[i], b[j]);
    };
    auto add_complete_between = [&](const VertexSet& x, const VertexSet& y) {
        for (int u : x)
            for (int v : y) es.emplace_back(std::min(u, v), std::max(u, v));
    };

    switch (spec.kind) {
        case FamilyKind::TwoCliques:
        case FamilyKind::BalancedCliques:
        case FamilyKind::CliqueForest:
        case FamilyKind::ToughnessCliques:
        case FamilyKind::MCliques:
            for (const auto& b : blocks) add_clique(b);
            break;
        case FamilyKind::IAB: {
            const auto& i_set = blocks[0];
            const auto& a_set = blocks[1];
            const auto& b_set = blocks[2];
            add_complete_between(i_set, a_set);
            VertexSet ab = a_set;
            ab.insert(ab.end(), b_set.begin(), b_set.end());
            add_clique(ab);
            break;
        }
        case FamilyKind::UnbalancedBipartite:
        case FamilyKind::DiracBipartite:
            add_complete_between(blocks[0], blocks[1]);
            break;
    }
    return Graph::from_edges(spec.n, es);
}

PredictedProperties predicted_properties(const FamilySpec& spec) {
    auto sizes = block_sizes(spec);
    PredictedProperties p;
    switch (spec.kind) {
        case FamilyKind::TwoCliques:
        case FamilyKind::BalancedCliques:
        case FamilyKind::CliqueForest:
        case FamilyKind::ToughnessCliques:
        case FamilyKind::MCliques:
            p.min_degree = sizes.front() - 1;
            p.independence_number = static_cast<int>(sizes.size());
            p.component_count = static_cast<int>(sizes.size());
            p.notes = "disjoint cliques";
            break;
        case FamilyKind::IAB: {
            int a = sizes[1], b = sizes[2];
            p.min_degree = b >= 1 ? a : a + b - 1;
            p.independence_number = sizes[0] + 1;
            p.component_count = 1;
            p.notes = "independent set joined to A, clique on A+B";
            break;
        }
        case FamilyKind::UnbalancedBipartite:
        case FamilyKind::DiracBipartite:
            p.min_degree = sizes[0];
            p.independence_number = sizes[1];
            p.component_count = 1;
            p.notes = "complete bipartite";
            break;
    }
    return p;
}

std::string family_to_json(const FamilySpec& spec) {
    ordered_json j;
    j["kind"] = family_kind_name(spec.kind);
    j["n"] = spec.n;
    switch (spec.kind) {
        case FamilyKind::BalancedCliques: j["delta"] = spec.delta; break;
        case FamilyKind::CliqueForest:
            j["d"] = spec.d;
            j["k"] = spec.k;
            break;
        case FamilyKind::ToughnessCliques:
            j["k"] = spec.k;
            j["c"] = spec.c;
            break;
        case FamilyKind::IAB: j["k"] = spec.k; break;
        case FamilyKind::MCliques: j["m"] = spec.m; break;
        default: break;
    }
    return j.dump();
}

FamilySpec family_from_json(const std::string& text) {
    auto j = ordered_json::parse(text);
    FamilySpec spec;
    spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<int>();
    if (j.contains("k")) spec.k = j["k"].get<int>();
    if (j.contains("d")) spec.d = j["d"].get<int>();
    if (j.contains("m")) spec.m = j["m"].get<int>();
    if (j.contains("delta")) spec.delta = j["delta"].get<double>();
    if (j.contains("c")) spec.c = j["c"].get<double>();
    return spec;
}

}  // namespace rpg
