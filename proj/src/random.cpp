#include "rpg/random.hpp"

#include <cmath>
#include <stdexcept>

namespace rpg {

namespace {

constexpr std::uint64_t kPairTag = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kArcTag = 0xc2b2ae3d27d4eb4fULL;
constexpr std::uint64_t kVertexTag = 0x165667b19e3779f9ULL;

double to_unit(std::uint64_t h) {
    // top 53 bits -> [0,1), exact in double
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t keyed(Seed seed, std::uint64_t tag, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(seed.value ^ tag);
    h = mix64(h ^ (a * 0xff51afd7ed558ccdULL));
    h = mix64(h ^ (b * 0xc4ceb9fe1a85ec53ULL));
    return h;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return keyed(Seed{base}, 0xd6e8feb86659fd93ULL, a, b);
}

double pair_uniform(Seed seed, int u, int v) {
    if (u > v) std::swap(u, v);
    return to_unit(keyed(seed, kPairTag, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)));
}

double arc_uniform(Seed seed, int u, int v) {
    return to_unit(keyed(seed, kArcTag, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)));
}

double vertex_uniform(Seed seed, int v) {
    return to_unit(keyed(seed, kVertexTag, static_cast<std::uint64_t>(v), 0));
}

bool gnp_pair_included(Seed seed, double p, int u, int v) {
    return pair_uniform(seed, u, v) < p;
}

Graph sample_gnp(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("sample_gnp: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pair_uniform(seed, u, v) < p) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Digraph sample_dnp(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("sample_dnp: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_dnp: p outside [0,1]");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc_uniform(seed, u, v) < p) arcs.emplace_back(u, v);
    return Digraph::from_arcs(n, arcs);
}

Graph perturb(const Graph& g, double p, Seed seed) {
    return graph_union(g, sample_gnp(g.vertex_count(), p, seed));
}

double split_two_rounds(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("split_two_rounds: p outside [0,1]");
    return 1.0 - std::sqrt(1.0 - p);
}

}  // namespace rpg
