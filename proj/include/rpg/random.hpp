#pragma once

#include <cstdint>

#include "rpg/graph.hpp"

namespace rpg {

/// Seed for the counter-based samplers. Identical seed + parameters yield
/// bit-identical samples on every platform.
struct Seed {
    std::uint64_t value = 0;
};

std::uint64_t mix64(std::uint64_t x);

/// Derives an independent child seed from (base, a, b); used for per-trial
/// and per-attempt streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Uniform in [0,1) for an unordered vertex pair, independent across pairs.
/// Pairs are canonicalized to (min,max), so inclusion tests are
/// order-independent and monotone-coupled across p for a fixed seed.
double pair_uniform(Seed seed, int u, int v);

/// Uniform in [0,1) for an ordered pair (arc sampling).
double arc_uniform(Seed seed, int u, int v);

/// Uniform in [0,1) keyed by a single integer (vertex sampling).
double vertex_uniform(Seed seed, int v);

/// Is {u,v} an edge of the G(n,p) sample with this seed? Lets callers probe
/// large samples without materializing them.
bool gnp_pair_included(Seed seed, double p, int u, int v);

/// Binomial random graph G(n,p): every unordered pair included
/// independently with probability p.
Graph sample_gnp(int n, double p, Seed seed);

/// Random digraph D(n,p): every ordered pair (i,j), i != j, is an arc
/// independently with probability p.
Digraph sample_dnp(int n, double p, Seed seed);

/// g with random edges added: union(g, sample_gnp(g.n, p, seed)).
Graph perturb(const Graph& g, double p, Seed seed);

/// Round probability q with (1-q)^2 = 1-p: two independent rounds at q,
/// unioned, match one round at p. Guarantees q >= p/2.
double split_two_rounds(double p);

}  // namespace rpg
