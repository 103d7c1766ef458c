#include <algorithm>

#include "rpg/checkers.hpp"

namespace rpg {

// Kuhn's augmenting-path maximum matching on an explicit bipartition.
MatchingResult bipartite_max_matching(int left, int right,
                                      const std::vector<std::pair<int, int>>& edges) {
    if (left < 0 || right < 0)
        throw std::invalid_argument("bipartite_max_matching: negative part size");
    std::vector<std::vector<int>> adj(left);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= left || v < 0 || v >= right)
            throw std::invalid_argument("bipartite_max_matching: endpoint out of range");
        adj[u].push_back(v);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    std::vector<int> match_right(right, -1);
    std::vector<char> used(right, 0);

    auto try_augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (match_right[v] < 0 || self(self, match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };

    MatchingResult res;
    for (int u = 0; u < left; ++u) {
        std::fill(used.begin(), used.end(), 0);
        if (try_augment(try_augment, u)) ++res.size;
    }
    for (int v = 0; v < right; ++v)
        if (match_right[v] >= 0) res.pairs.emplace_back(match_right[v], v);
    std::sort(res.pairs.begin(), res.pairs.end());
    return res;
}

}  // namespace rpg
