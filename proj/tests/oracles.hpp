// Brute-force reference implementations for tests. Everything here is
// deliberately naive and independent of the library's search code.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "rpg/graph.hpp"

namespace oracle {

using rpg::Graph;

inline int components_after_removal(const Graph& g, const std::vector<char>& removed) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        ++count;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!removed[v] && comp[v] < 0) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
    }
    return count;
}

// All Hamilton cycles checked by permutation (fix vertex 0 first).
inline bool hamiltonian(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool hamilton_path(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    std::vector<int> mids;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) mids.push_back(w);
    std::sort(mids.begin(), mids.end());
    do {
        std::vector<int> seq{u};
        seq.insert(seq.end(), mids.begin(), mids.end());
        seq.push_back(v);
        bool ok = true;
        for (size_t i = 0; ok && i + 1 < seq.size(); ++i) ok = g.has_edge(seq[i], seq[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(mids.begin(), mids.end()));
    return false;
}

// Longest simple cycle by exhaustive path extension from each root.
inline int circumference(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    auto rec = [&](auto&& self, int root, int end) -> void {
        if (path.size() >= 3 && g.has_edge(end, root))
            best = std::max(best, static_cast<int>(path.size()));
        for (int c : g.neighbors(end)) {
            if (c <= root || used[c]) continue;
            used[c] = 1;
            path.push_back(c);
            self(self, root, c);
            path.pop_back();
            used[c] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        std::fill(used.begin(), used.end(), 0);
        used[root] = 1;
        path.assign(1, root);
        rec(rec, root, root);
    }
    return best;
}

// Set of all simple-cycle lengths.
inline std::set<int> cycle_lengths(const Graph& g) {
    int n = g.vertex_count();
    std::set<int> lengths;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    auto rec = [&](auto&& self, int root, int end) -> void {
        if (path.size() >= 3 && g.has_edge(end, root))
            lengths.insert(static_cast<int>(path.size()));
        for (int c : g.neighbors(end)) {
            if (c <= root || used[c]) continue;
            used[c] = 1;
            path.push_back(c);
            self(self, root, c);
            path.pop_back();
            used[c] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        std::fill(used.begin(), used.end(), 0);
        used[root] = 1;
        path.assign(1, root);
        rec(rec, root, root);
    }
    return lengths;
}

inline int independence_number(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return std::max(0, n - 1);
    int best = n - 1;  // remove all but one vertex
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) removed[v] = 1;
        if (n - __builtin_popcount(mask) < 2) continue;
        if (components_after_removal(g, removed) >= 2)
            best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

struct Toughness {
    bool separable = false;
    long long size = 0;
    long long comps = 1;
};

inline Toughness toughness(const Graph& g) {
    int n = g.vertex_count();
    Toughness t;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) removed[v] = 1;
        int comps = components_after_removal(g, removed);
        if (comps < 2) continue;
        long long size = __builtin_popcount(mask);
        if (!t.separable || size * t.comps < t.size * comps) {
            t.separable = true;
            t.size = size;
            t.comps = comps;
        }
    }
    return t;
}

// Existence of pairwise vertex-disjoint paths with the given endpoints,
// optionally required to cover every vertex.
inline bool disjoint_paths_exist(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                                 bool spanning) {
    int n = g.vertex_count();
    std::vector<char> used(n, 0);
    for (auto [a, b] : pairs) used[a] = used[b] = 1;

    auto rec = [&](auto&& self, size_t p, int end) -> bool {
        if (end == pairs[p].second) {
            if (p + 1 == pairs.size()) {
                if (!spanning) return true;
                for (int v = 0; v < n; ++v)
                    if (!used[v]) return false;
                return true;
            }
            return self(self, p + 1, pairs[p + 1].first);
        }
        for (int c : g.neighbors(end)) {
            if (c == pairs[p].second) {
                if (self(self, p, c)) return true;
                continue;
            }
            if (used[c]) continue;
            used[c] = 1;
            if (self(self, p, c)) return true;
            used[c] = 0;
        }
        return false;
    };
    return rec(rec, 0, pairs[0].first);
}

inline int longest_directed_cycle_len(const rpg::Digraph& d) {
    int n = d.vertex_count();
    int best = 0;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    auto rec = [&](auto&& self, int root, int end) -> void {
        if (path.size() >= 2)
            for (int w : d.out_neighbors(end))
                if (w == root) best = std::max(best, static_cast<int>(path.size()));
        for (int c : d.out_neighbors(end)) {
            if (c <= root || used[c]) continue;
            used[c] = 1;
            path.push_back(c);
            self(self, root, c);
            path.pop_back();
            used[c] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        std::fill(used.begin(), used.end(), 0);
        used[root] = 1;
        path.assign(1, root);
        rec(rec, root, root);
    }
    return best;
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);           // outer cycle
        es.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
        es.emplace_back(i, 5 + i);                 // spokes
    }
    return Graph::from_edges(10, es);
}

}  // namespace oracle
