#include <algorithm>
#include <array>

#include "rpg/checkers.hpp"

namespace rpg {

namespace {

// Fixed-width bitset covering the independence cap (256 vertices).
constexpr int kWords = 4;

struct Mask {
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
        return -1;
    }
    bool subset_of(const Mask& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    void and_not(const Mask& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
    }
};

struct MisSolver {
    int n = 0;
    std::vector<Mask> closed_nb;  // N[v] in search order
    std::vector<int> to_host;
    std::vector<int> best;
    std::vector<int> current;

    // Greedy clique cover of the candidates: any independent set picks at
    // most one vertex per clique, so the cover size bounds what is left.
    int cover_bound(const Mask& cand) const {
        std::vector<Mask> cliques;
        Mask rest = cand;
        for (int v = rest.first(); v >= 0; v = rest.first()) {
            rest.clear(v);
            bool placed = false;
            for (auto& cl : cliques)
                if (cl.subset_of(closed_nb[v])) {
                    cl.set(v);
                    placed = true;
                    break;
                }
            if (!placed) {
                Mask cl;
                cl.set(v);
                cliques.push_back(cl);
            }
        }
        return static_cast<int>(cliques.size());
    }

    void expand(Mask cand) {
        int v = cand.first();
        if (v < 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + static_cast<size_t>(cover_bound(cand)) <= best.size()) return;
        // include v
        Mask rest = cand;
        rest.and_not(closed_nb[v]);
        current.push_back(v);
        expand(rest);
        current.pop_back();
        // exclude v
        cand.clear(v);
        expand(cand);
    }
};

}  // namespace

AlphaResult independence_number(const Graph& g, const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (n > caps.alpha_cap || n > 64 * kWords)
        throw CapacityError("independence_number: vertex count exceeds cap");
    AlphaResult res;
    if (n == 0) return res;

    // High-degree vertices first: including them prunes the most.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    MisSolver solver;
    solver.n = n;
    solver.to_host = order;
    solver.closed_nb.assign(n, Mask{});
    for (int v = 0; v < n; ++v) {
        solver.closed_nb[pos[v]].set(pos[v]);
        for (int u : g.neighbors(v)) solver.closed_nb[pos[v]].set(pos[u]);
    }

    // Greedy seed, lowest degree first.
    std::vector<int> greedy_order = order;
    std::reverse(greedy_order.begin(), greedy_order.end());
    std::vector<char> blocked(n, 0);
    for (int v : greedy_order) {
        if (blocked[v]) continue;
        solver.best.push_back(pos[v]);
        blocked[v] = 1;
        for (int u : g.neighbors(v)) blocked[u] = 1;
    }

    Mask all;
    for (int i = 0; i < n; ++i) all.set(i);
    solver.expand(all);

    res.alpha = static_cast<int>(solver.best.size());
    for (int i : solver.best) res.witness.push_back(solver.to_host[i]);
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

}  // namespace rpg
