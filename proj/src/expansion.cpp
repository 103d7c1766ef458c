#include <algorithm>

#include "rpg/checkers.hpp"

namespace rpg {

// Exhaustive (k,d)-expansion test, subsets in size order then lexicographic,
// so the reported violator is a smallest one.
ExpanderResult expander_check(const Graph& g, int k, double d, std::uint64_t subset_budget) {
    int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("expander_check: need k >= 1");
    k = std::min(k, n);

    // count subsets up front; refuse oversized enumerations
    long double total = 0;
    for (int s = 1; s <= k; ++s) {
        long double c = 1;
        for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
        total += c;
        if (total > static_cast<long double>(subset_budget))
            throw CapacityError("expander_check: subset count exceeds budget");
    }

    ExpanderResult res;
    std::vector<int> pick;
    std::vector<char> in_set(n, 0);
    std::vector<int> nb_count(n, 0);  // members of S adjacent to v

    auto rec = [&](auto&& self, int start, int size) -> bool {
        if (static_cast<int>(pick.size()) == size) {
            int external = 0;
            for (int v = 0; v < n; ++v)
                if (!in_set[v] && nb_count[v] > 0) ++external;
            if (static_cast<double>(external) < d * static_cast<double>(size)) {
                res.violator = pick;
                return true;
            }
            return false;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            in_set[v] = 1;
            for (int u : g.neighbors(v)) ++nb_count[u];
            if (self(self, v + 1, size)) return true;
            for (int u : g.neighbors(v)) --nb_count[u];
            in_set[v] = 0;
            pick.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= k; ++size) {
        pick.clear();
        if (rec(rec, 0, size)) {
            res.ok = false;
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace rpg
