#include <algorithm>

#include "rpg/checkers.hpp"
#include "rpg/random.hpp"

namespace rpg {

namespace {

int component_count_after_removal(const Graph& g, std::uint32_t removed) {
    int n = g.vertex_count();
    int comps = 0;
    std::uint32_t seen = removed;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    while (seen != all) {
        int s = __builtin_ctz(~seen);
        ++comps;
        std::uint32_t frontier = 1u << s;
        seen |= frontier;
        while (frontier) {
            std::uint32_t next = 0;
            while (frontier) {
                int u = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                for (int v : g.neighbors(u)) next |= 1u << v;
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
    }
    return comps;
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(__builtin_ctz(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

ToughnessReport toughness_exact(const Graph& g, const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (n > caps.toughness_cap || n > 31)
        throw CapacityError("toughness_exact: vertex count exceeds cap");
    ToughnessReport rep;
    if (n == 0) return rep;

    std::uint32_t all = (1u << n) - 1;
    // every nonempty proper subset, in ascending mask order
    for (std::uint32_t s = 1; s < all; ++s) {
        int comps = component_count_after_removal(g, s);
        if (comps < 2) continue;
        long long size = __builtin_popcount(s);
        if (!rep.separable || size * rep.component_count <
                                  rep.witness_size * static_cast<long long>(comps)) {
            rep.separable = true;
            rep.witness_size = size;
            rep.component_count = comps;
            rep.witness = mask_to_set(s);
        }
    }
    return rep;
}

ToughnessCheck toughness_at_least(const Graph& g, double t, const CheckerCaps& caps,
                                  std::uint64_t sample_seed, int samples) {
    if (t <= 0) throw std::invalid_argument("toughness_at_least: need t > 0");
    int n = g.vertex_count();
    ToughnessCheck res;
    if (n <= caps.toughness_cap && n <= 31) {
        std::uint32_t all = (1u << n) - 1;
        for (std::uint32_t s = 1; s < all; ++s) {
            int comps = component_count_after_removal(g, s);
            if (comps < 2) continue;
            // violates t-toughness iff comps > |S|/t
            if (static_cast<double>(comps) * t > static_cast<double>(__builtin_popcount(s))) {
                res.verdict = Verdict::No;
                res.violator = mask_to_set(s);
                return res;
            }
        }
        res.verdict = Verdict::Yes;
        return res;
    }
    if (n > 31) throw CapacityError("toughness_at_least: vertex count exceeds sampling cap");

    // Beyond the exact cap: sampled separating sets. A violation refutes;
    // absence of one is only evidence, reported as Indeterminate.
    Seed seed{sample_seed};
    for (int trial = 0; trial < samples; ++trial) {
        Seed s{derive_seed(seed.value, static_cast<std::uint64_t>(trial), 0)};
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
            if (vertex_uniform(s, v) < 0.5) mask |= 1u << v;
        if (mask == 0 || mask == (1u << n) - 1) continue;
        int comps = component_count_after_removal(g, mask);
        if (comps < 2) continue;
        if (static_cast<double>(comps) * t > static_cast<double>(__builtin_popcount(mask))) {
            res.verdict = Verdict::No;
            res.violator = mask_to_set(mask);
            return res;
        }
    }
    res.verdict = Verdict::Indeterminate;
    return res;
}

}  // namespace rpg
