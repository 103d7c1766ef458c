#pragma once

#include <cstdint>
#include <vector>

#include "rpg/graph.hpp"

namespace rpg::bits {

constexpr std::uint64_t bit(int i) { return 1ULL << i; }
inline int popcnt(std::uint64_t x) { return __builtin_popcountll(x); }
inline int lowbit(std::uint64_t x) { return __builtin_ctzll(x); }

inline std::uint64_t full_mask(int n) { return n >= 64 ? ~0ULL : (bit(n) - 1); }

/// Adjacency rows as 64-bit masks; requires n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

/// BFS closure of start within allowed (start itself is always included).
std::uint64_t reach(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                    std::uint64_t start);

}  // namespace rpg::bits
