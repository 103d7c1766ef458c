#include <algorithm>
#include <queue>

#include "rpg/checkers.hpp"

namespace rpg {

namespace {

constexpr std::uint64_t bit(int i) { return 1ULL << i; }
int popcnt(std::uint64_t x) { return __builtin_popcountll(x); }
int lowbit(std::uint64_t x) { return __builtin_ctzll(x); }

struct BitGraph {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> adj;
};

BitGraph make_bits(const Graph& g) {
    BitGraph bg;
    bg.n = g.vertex_count();
    bg.full = bg.n == 64 ? ~0ULL : (bit(bg.n) - 1);
    bg.adj.assign(bg.n, 0);
    for (int v = 0; v < bg.n; ++v)
        for (int u : g.neighbors(v)) bg.adj[v] |= bit(u);
    return bg;
}

struct BitDigraph {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> out, in;
};

BitDigraph make_bits(const Digraph& d) {
    BitDigraph bg;
    bg.n = d.vertex_count();
    bg.full = bg.n == 64 ? ~0ULL : (bit(bg.n) - 1);
    bg.out.assign(bg.n, 0);
    bg.in.assign(bg.n, 0);
    for (int v = 0; v < bg.n; ++v)
        for (int u : d.out_neighbors(v)) {
            bg.out[v] |= bit(u);
            bg.in[u] |= bit(v);
        }
    return bg;
}

std::uint64_t reach_mask(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                         std::uint64_t start) {
    std::uint64_t seen = start;
    std::uint64_t frontier = start;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int u = lowbit(frontier);
            frontier &= frontier - 1;
            next |= adj[u];
        }
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

enum class SStat { Found, Exhausted, Budget };

struct Counter {
    std::uint64_t left;
    bool hit = false;

    bool tick() {
        if (left == 0) {
            hit = true;
            return false;
        }
        --left;
        return true;
    }
};

// Candidates sorted by fewest onward moves, then smallest label.
void order_candidates(const std::vector<std::uint64_t>& adj, std::uint64_t cands,
                      std::uint64_t unused, std::vector<int>& out) {
    out.clear();
    while (cands) {
        int v = lowbit(cands);
        cands &= cands - 1;
        out.push_back(v);
    }
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        return popcnt(adj[a] & unused & ~bit(a)) < popcnt(adj[b] & unused & ~bit(b));
    });
}

// --- DFS Hamilton cycle, anchored at vertex 0 ---

struct HamCycleDfs {
    const BitGraph& bg;
    Counter& budget;
    std::vector<int> path;

    SStat run() {
        path.assign(1, 0);
        return rec(0, 1ULL);
    }

    SStat rec(int end, std::uint64_t used) {
        if (!budget.tick()) return SStat::Budget;
        std::uint64_t unused = bg.full & ~used;
        if (!unused) return (bg.adj[end] & 1ULL) ? SStat::Found : SStat::Exhausted;
        for (std::uint64_t t = unused; t;) {
            int v = lowbit(t);
            t &= t - 1;
            std::uint64_t avail = (unused & ~bit(v)) | bit(end) | 1ULL;
            if (popcnt(bg.adj[v] & avail) < 2) return SStat::Exhausted;
        }
        std::uint64_t seen = reach_mask(bg.adj, unused | 1ULL, bit(end));
        if (((unused | 1ULL) & ~seen) != 0) return SStat::Exhausted;

        std::vector<int> cands;
        order_candidates(bg.adj, bg.adj[end] & unused, unused, cands);
        for (int c : cands) {
            path.push_back(c);
            SStat s = rec(c, used | bit(c));
            if (s != SStat::Exhausted) return s;
            path.pop_back();
        }
        return SStat::Exhausted;
    }
};

// --- DFS Hamilton path from vertex 0 to target ---

struct HamPathDfs {
    const BitGraph& bg;
    Counter& budget;
    int target;
    std::vector<int> path;

    SStat run() {
        path.assign(1, 0);
        return rec(0, 1ULL);
    }

    SStat rec(int end, std::uint64_t used) {
        if (!budget.tick()) return SStat::Budget;
        std::uint64_t unused = bg.full & ~used;
        if (!unused) return end == target ? SStat::Found : SStat::Exhausted;
        for (std::uint64_t t = unused; t;) {
            int v = lowbit(t);
            t &= t - 1;
            std::uint64_t avail = (unused & ~bit(v)) | bit(end);
            int need = v == target ? 1 : 2;
            if (popcnt(bg.adj[v] & avail) < need) return SStat::Exhausted;
        }
        std::uint64_t seen = reach_mask(bg.adj, unused, bit(end));
        if ((unused & ~seen) != 0) return SStat::Exhausted;

        std::uint64_t cmask = bg.adj[end] & unused;
        if (unused != bit(target)) cmask &= ~bit(target);  // target enters last
        std::vector<int> cands;
        order_candidates(bg.adj, cmask, unused, cands);
        for (int c : cands) {
            path.push_back(c);
            SStat s = rec(c, used | bit(c));
            if (s != SStat::Exhausted) return s;
            path.pop_back();
        }
        return SStat::Exhausted;
    }
};

// --- anchored subset DP (n <= 24), exact Hamilton path/cycle ---

struct AnchoredDp {
    int n;
    std::vector<std::uint32_t> adj;  // relabeled adjacency, anchor = 0
    std::vector<std::uint32_t> dp;   // dp[idx] = endpoint set; mask = (idx<<1)|1

    void run() {
        dp.assign(1u << (n - 1), 0);
        dp[0] = 1;
        std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
        for (std::uint32_t idx = 0; idx < dp.size(); ++idx) {
            std::uint32_t r = dp[idx];
            if (!r) continue;
            std::uint32_t mask = (idx << 1) | 1u;
            std::uint32_t cand = ~mask & all;
            while (cand) {
                int w = __builtin_ctz(cand);
                cand &= cand - 1;
                if (adj[w] & r) dp[idx | (1u << (w - 1))] |= (1u << w);
            }
        }
    }

    std::vector<int> rebuild(std::uint32_t mask, int v) const {
        std::vector<int> out{v};
        while (mask != 1u) {
            std::uint32_t pmask = mask & ~(1u << v);
            std::uint32_t prevs = dp[pmask >> 1] & adj[v];
            v = __builtin_ctz(prevs);
            out.push_back(v);
            mask = pmask;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

AnchoredDp make_dp(const Graph& g, const std::vector<int>& order) {
    AnchoredDp dp;
    dp.n = g.vertex_count();
    std::vector<int> pos(dp.n);
    for (int i = 0; i < dp.n; ++i) pos[order[i]] = i;
    dp.adj.assign(dp.n, 0);
    for (int v = 0; v < dp.n; ++v)
        for (int u : g.neighbors(v)) dp.adj[pos[v]] |= 1u << pos[u];
    return dp;
}

std::vector<int> anchor_order(int n, int anchor) {
    std::vector<int> order{anchor};
    for (int v = 0; v < n; ++v)
        if (v != anchor) order.push_back(v);
    return order;
}

// --- quick sound refutations ---

bool has_cut_vertex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0;
    bool cut = false;
    for (int root = 0; root < n && !cut; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty() && !cut) {
            auto& [u, i] = stack.back();
            if (i < g.neighbors(u).size()) {
                int v = g.neighbors(u)[i++];
                if (disc[v] < 0) {
                    parent[v] = u;
                    if (u == root) ++root_children;
                    disc[v] = low[v] = timer++;
                    stack.emplace_back(v, 0);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) cut = true;
                }
            }
        }
        if (root_children > 1) cut = true;
    }
    return cut;
}

// Two-coloring; returns part sizes or nullopt when an odd cycle exists.
std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g, std::vector<int>* color_out) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    int a = 0;
    for (int v = 0; v < n; ++v) a += color[v] == 0;
    if (color_out) *color_out = color;
    return std::make_pair(a, n - a);
}

// Exact girth: min over BFS roots of dist[u]+dist[w]+1 across non-tree edges.
int girth(const Graph& g) {
    int n = g.vertex_count();
    int best = n + 1;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;  // n+1 when acyclic
}

// --- cycle spectrum DP (n <= spectrum cap): all cycle lengths at once ---

struct Spectrum {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<std::uint32_t> reach;            // path sets anchored at min vertex
    std::vector<std::pair<std::uint32_t, int>> close_at;  // length -> (mask, endpoint)

    void run(const Graph& g) {
        n = g.vertex_count();
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[v] |= 1u << u;
        std::uint32_t all = (1u << n) - 1;
        reach.assign(1u << n, 0);
        close_at.assign(n + 1, {0, -1});
        for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            std::uint32_t r = reach[mask];
            if (!r) continue;
            int low = __builtin_ctz(mask);
            int len = __builtin_popcount(mask);
            if (len >= 3 && close_at[len].second < 0) {
                std::uint32_t closing = r & adj[low];
                if (closing) close_at[len] = {mask, __builtin_ctz(closing)};
            }
            std::uint32_t cand = ~mask & all & ~((1u << low) | ((1u << low) - 1));
            while (cand) {
                int w = __builtin_ctz(cand);
                cand &= cand - 1;
                if (adj[w] & r) reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }

    std::vector<int> rebuild(std::uint32_t mask, int v) const {
        std::vector<int> out{v};
        while (__builtin_popcount(mask) > 1) {
            std::uint32_t pmask = mask & ~(1u << v);
            std::uint32_t prevs = reach[pmask] & adj[v];
            v = __builtin_ctz(prevs);
            out.push_back(v);
            mask = pmask;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

// --- longest cycle DFS with reachability bound ---

struct LongCycleDfs {
    const BitGraph& bg;
    Counter& budget;
    int best = 0;
    std::vector<int> best_cycle;
    std::vector<int> path;

    void run() {
        for (int r = 0; r < bg.n; ++r) {
            std::uint64_t allowed = bg.full & ~(bit(r) - 1);
            if (popcnt(allowed) <= best) break;
            path.assign(1, r);
            rec(r, r, bit(r), allowed);
            if (budget.hit || best == bg.n) return;
        }
    }

    void rec(int root, int end, std::uint64_t used, std::uint64_t allowed) {
        if (!budget.tick()) return;
        int depth = popcnt(used);
        if (depth >= 3 && (bg.adj[end] >> root & 1) && depth > best) {
            best = depth;
            best_cycle = path;
        }
        std::uint64_t unused = allowed & ~used;
        std::uint64_t seen = reach_mask(bg.adj, unused | bit(root), bit(end));
        if (!(seen >> root & 1)) return;
        if (depth + popcnt(seen & unused) <= best) return;

        std::vector<int> cands;
        order_candidates(bg.adj, bg.adj[end] & unused, unused, cands);
        std::reverse(cands.begin(), cands.end());  // most onward freedom first
        for (int c : cands) {
            path.push_back(c);
            rec(root, c, used | bit(c), allowed);
            path.pop_back();
            if (budget.hit) return;
        }
    }
};

// --- fixed-length cycle DFS ---

struct FixedLenDfs {
    const BitGraph& bg;
    const Graph& g;
    Counter& budget;
    int target;
    std::vector<int> path;
    std::vector<int> dist;

    SStat run() {
        bool exhausted = true;
        for (int r = 0; r + target <= bg.n; ++r) {
            std::uint64_t allowed = bg.full & ~(bit(r) - 1);
            bfs_from(r, allowed);
            path.assign(1, r);
            SStat s = rec(r, r, bit(r), allowed);
            if (s == SStat::Found) return s;
            if (s == SStat::Budget) exhausted = false;
        }
        return exhausted ? SStat::Exhausted : SStat::Budget;
    }

    void bfs_from(int root, std::uint64_t allowed) {
        dist.assign(bg.n, bg.n + 1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if ((allowed >> v & 1) && dist[v] > dist[u] + 1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
    }

    SStat rec(int root, int end, std::uint64_t used, std::uint64_t allowed) {
        if (!budget.tick()) return SStat::Budget;
        int depth = popcnt(used);
        if (depth == target)
            return (bg.adj[end] >> root & 1) ? SStat::Found : SStat::Exhausted;
        std::uint64_t cmask = bg.adj[end] & allowed & ~used;
        bool exhausted = true;
        std::vector<int> cands;
        while (cmask) {
            int c = lowbit(cmask);
            cmask &= cmask - 1;
            if (dist[c] <= target - depth) cands.push_back(c);
        }
        for (int c : cands) {
            path.push_back(c);
            SStat s = rec(root, c, used | bit(c), allowed);
            if (s == SStat::Found) return s;
            if (s == SStat::Budget) exhausted = false;
            path.pop_back();
        }
        return exhausted ? SStat::Exhausted : SStat::Budget;
    }
};

// --- directed searches ---

struct DirHamDfs {
    const BitDigraph& bg;
    Counter& budget;
    std::vector<int> path;

    SStat run() {
        path.assign(1, 0);
        return rec(0, 1ULL);
    }

    SStat rec(int end, std::uint64_t used) {
        if (!budget.tick()) return SStat::Budget;
        std::uint64_t unused = bg.full & ~used;
        if (!unused) return (bg.out[end] & 1ULL) ? SStat::Found : SStat::Exhausted;
        for (std::uint64_t t = unused; t;) {
            int v = lowbit(t);
            t &= t - 1;
            std::uint64_t rest = unused & ~bit(v);
            if (!(bg.in[v] & (rest | bit(end)))) return SStat::Exhausted;
            if (!(bg.out[v] & (rest | 1ULL))) return SStat::Exhausted;
        }
        std::uint64_t seen = reach_mask(bg.out, unused | 1ULL, bit(end));
        if (((unused | 1ULL) & ~seen) != 0) return SStat::Exhausted;

        std::vector<int> cands;
        order_candidates(bg.out, bg.out[end] & unused, unused, cands);
        for (int c : cands) {
            path.push_back(c);
            SStat s = rec(c, used | bit(c));
            if (s != SStat::Exhausted) return s;
            path.pop_back();
        }
        return SStat::Exhausted;
    }
};

struct DirSpectrum {
    int n = 0;
    std::vector<std::uint32_t> out, in;
    std::vector<std::uint32_t> reach;
    std::vector<std::pair<std::uint32_t, int>> close_at;

    void run(const Digraph& d) {
        n = d.vertex_count();
        out.assign(n, 0);
        in.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : d.out_neighbors(v)) {
                out[v] |= 1u << u;
                in[u] |= 1u << v;
            }
        std::uint32_t all = (1u << n) - 1;
        reach.assign(1u << n, 0);
        close_at.assign(n + 1, {0, -1});
        for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            std::uint32_t r = reach[mask];
            if (!r) continue;
            int low = __builtin_ctz(mask);
            int len = __builtin_popcount(mask);
            if (len >= 2 && close_at[len].second < 0) {
                std::uint32_t closing = r & in[low];
                if (closing) close_at[len] = {mask, __builtin_ctz(closing)};
            }
            std::uint32_t cand = ~mask & all & ~((1u << low) | ((1u << low) - 1));
            while (cand) {
                int w = __builtin_ctz(cand);
                cand &= cand - 1;
                if (in[w] & r) reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }

    std::vector<int> rebuild(std::uint32_t mask, int v) const {
        std::vector<int> path{v};
        while (__builtin_popcount(mask) > 1) {
            std::uint32_t pmask = mask & ~(1u << v);
            std::uint32_t prevs = reach[pmask] & in[v];
            v = __builtin_ctz(prevs);
            path.push_back(v);
            mask = pmask;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

struct DirLongCycleDfs {
    const BitDigraph& bg;
    Counter& budget;
    int best = 0;
    std::vector<int> best_cycle;
    std::vector<int> path;

    void run() {
        for (int r = 0; r < bg.n; ++r) {
            std::uint64_t allowed = bg.full & ~(bit(r) - 1);
            if (popcnt(allowed) <= best) break;
            path.assign(1, r);
            rec(r, r, bit(r), allowed);
            if (budget.hit || best == bg.n) return;
        }
    }

    void rec(int root, int end, std::uint64_t used, std::uint64_t allowed) {
        if (!budget.tick()) return;
        int depth = popcnt(used);
        if (depth >= 2 && (bg.out[end] >> root & 1) && depth > best) {
            best = depth;
            best_cycle = path;
        }
        std::uint64_t unused = allowed & ~used;
        std::uint64_t seen = reach_mask(bg.out, unused | bit(root), bit(end));
        if (!(seen >> root & 1)) return;
        if (depth + popcnt(seen & unused) <= best) return;

        std::vector<int> cands;
        order_candidates(bg.out, bg.out[end] & unused, unused, cands);
        std::reverse(cands.begin(), cands.end());
        for (int c : cands) {
            path.push_back(c);
            rec(root, c, used | bit(c), allowed);
            path.pop_back();
            if (budget.hit) return;
        }
    }
};

std::vector<int> relabel(const std::vector<int>& seq, const std::vector<int>& order) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int v : seq) out.push_back(order[v]);
    return out;
}

constexpr std::uint64_t kQuickDfsSlice = 20000;

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

CycleSearchResult is_hamiltonian(const Graph& g, const SearchBudget& budget,
                                 const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("is_hamiltonian: need n >= 3");

    CycleSearchResult res;
    if (!is_connected(g) || degree_stats(g).min_degree < 2 || has_cut_vertex(g)) {
        res.verdict = Verdict::No;
        return res;
    }
    if (auto parts = bipartition_sizes(g, nullptr); parts && parts->first != parts->second) {
        res.verdict = Verdict::No;
        return res;
    }
    if (n > caps.search_cap) throw CapacityError("is_hamiltonian: vertex count exceeds cap");

    BitGraph bg = make_bits(g);
    int dp_cap = std::min(caps.exact_dp_cap, 24);
    Counter quick{n <= dp_cap ? kQuickDfsSlice : budget.nodes};
    HamCycleDfs dfs{bg, quick};
    SStat s = dfs.run();
    if (s == SStat::Found) {
        res.verdict = Verdict::Yes;
        res.cycle = dfs.path;
        return res;
    }
    if (s == SStat::Exhausted) {
        res.verdict = Verdict::No;
        return res;
    }
    if (n > dp_cap) {
        res.verdict = Verdict::Indeterminate;
        return res;
    }

    auto order = anchor_order(n, 0);
    AnchoredDp dp = make_dp(g, order);
    dp.run();
    std::uint32_t full_idx = (1u << (n - 1)) - 1;
    std::uint32_t closing = dp.dp[full_idx] & dp.adj[0];
    if (!closing) {
        res.verdict = Verdict::No;
        return res;
    }
    res.verdict = Verdict::Yes;
    res.cycle = relabel(dp.rebuild((full_idx << 1) | 1u, __builtin_ctz(closing)), order);
    return res;
}

PathSearchResult hamilton_path_between(const Graph& g, int u, int v, const SearchBudget& budget,
                                       const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (u == v) throw std::invalid_argument("hamilton_path_between: endpoints must differ");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("hamilton_path_between: endpoint out of range");

    PathSearchResult res;
    if (n == 2) {
        if (g.has_edge(u, v)) {
            res.verdict = Verdict::Yes;
            res.path = {u, v};
        } else {
            res.verdict = Verdict::No;
        }
        return res;
    }
    if (!is_connected(g)) {
        res.verdict = Verdict::No;
        return res;
    }
    for (int w = 0; w < n; ++w)
        if (w != u && w != v && g.degree(w) < 2) {
            res.verdict = Verdict::No;
            return res;
        }
    std::vector<int> color;
    if (auto parts = bipartition_sizes(g, &color)) {
        auto [a, b] = *parts;
        bool ok;
        if (a == b) ok = color[u] != color[v];
        else if (a == b + 1) ok = color[u] == 0 && color[v] == 0;
        else if (b == a + 1) ok = color[u] == 1 && color[v] == 1;
        else ok = false;
        if (!ok) {
            res.verdict = Verdict::No;
            return res;
        }
    }
    if (n > caps.search_cap)
        throw CapacityError("hamilton_path_between: vertex count exceeds cap");

    auto order = anchor_order(n, u);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    InducedSubgraph re;  // relabeled copy with anchor 0
    {
        std::vector<std::pair<int, int>> es;
        for (auto [a, b] : g.edges()) es.emplace_back(pos[a], pos[b]);
        re.graph = Graph::from_edges(n, es);
        re.to_host = order;
    }

    BitGraph bg = make_bits(re.graph);
    int dp_cap = std::min(caps.exact_dp_cap, 24);
    Counter quick{n <= dp_cap ? kQuickDfsSlice : budget.nodes};
    HamPathDfs dfs{bg, quick, pos[v]};
    SStat s = dfs.run();
    if (s == SStat::Found) {
        res.verdict = Verdict::Yes;
        res.path = relabel(dfs.path, order);
        return res;
    }
    if (s == SStat::Exhausted) {
        res.verdict = Verdict::No;
        return res;
    }
    if (n > dp_cap) {
        res.verdict = Verdict::Indeterminate;
        return res;
    }

    AnchoredDp dp = make_dp(re.graph, anchor_order(n, 0));
    dp.run();
    std::uint32_t full_idx = (1u << (n - 1)) - 1;
    if (dp.dp[full_idx] >> pos[v] & 1) {
        res.verdict = Verdict::Yes;
        res.path = relabel(dp.rebuild((full_idx << 1) | 1u, pos[v]), order);
    } else {
        res.verdict = Verdict::No;
    }
    return res;
}

HamiltonConnectedResult is_hamilton_connected(const Graph& g, const SearchBudget& budget,
                                              const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("is_hamilton_connected: need n >= 3");
    HamiltonConnectedResult res;
    std::pair<int, int> first_indet{-1, -1};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto r = hamilton_path_between(g, u, v, budget, caps);
            if (r.verdict == Verdict::No) {
                res.verdict = Verdict::No;
                res.failing_pair = {u, v};
                return res;
            }
            if (r.verdict == Verdict::Indeterminate && first_indet.first < 0)
                first_indet = {u, v};
        }
    if (first_indet.first >= 0) {
        res.verdict = Verdict::Indeterminate;
        res.failing_pair = first_indet;
    } else {
        res.verdict = Verdict::Yes;
    }
    return res;
}

CycleSearchResult cycle_of_length(const Graph& g, int length, const SearchBudget& budget,
                                  const CheckerCaps& caps) {
    int n = g.vertex_count();
    CycleSearchResult res;
    if (length < 3 || length > n) {
        res.verdict = Verdict::No;
        return res;
    }
    if (n <= caps.spectrum_dp_cap) {
        Spectrum sp;
        sp.run(g);
        auto [mask, end] = sp.close_at[length];
        if (end < 0) {
            res.verdict = Verdict::No;
        } else {
            res.verdict = Verdict::Yes;
            res.cycle = sp.rebuild(mask, end);
        }
        return res;
    }
    if (n > caps.search_cap) throw CapacityError("cycle_of_length: vertex count exceeds cap");
    BitGraph bg = make_bits(g);
    Counter counter{budget.nodes};
    FixedLenDfs dfs{bg, g, counter, length};
    SStat s = dfs.run();
    if (s == SStat::Found) {
        res.verdict = Verdict::Yes;
        res.cycle = dfs.path;
    } else {
        res.verdict = s == SStat::Exhausted ? Verdict::No : Verdict::Indeterminate;
    }
    return res;
}

PancyclicityReport pancyclicity_report(const Graph& g, const SearchBudget& budget,
                                       const CheckerCaps& caps) {
    int n = g.vertex_count();
    PancyclicityReport rep;
    rep.n = n;
    if (n < 3) return rep;

    if (n <= caps.spectrum_dp_cap) {
        Spectrum sp;
        sp.run(g);
        for (int len = 3; len <= n; ++len) {
            auto [mask, end] = sp.close_at[len];
            if (end < 0) {
                rep.missing_lengths.push_back(len);
            } else {
                rep.present_lengths.push_back(len);
                rep.certificates[len] = sp.rebuild(mask, end);
            }
        }
        return rep;
    }
    if (n > caps.search_cap) throw CapacityError("pancyclicity_report: vertex count exceeds cap");

    std::vector<char> state(n + 1, '?');  // '?', 'p'resent, 'm'issing
    int g0 = girth(g);
    for (int len = 3; len < std::min(g0, n + 1); ++len) state[len] = 'm';
    bool bip = bipartition_sizes(g, nullptr).has_value();
    if (bip)
        for (int len = 3; len <= n; ++len)
            if (len % 2 == 1) state[len] = 'm';

    // Seed with a Hamilton cycle, then derive shorter cycles through chords:
    // a chord across a found cycle splits it into two shorter ones.
    std::vector<std::vector<int>> queue_certs;
    size_t queue_head = 0;
    auto add_cert = [&](const std::vector<int>& cyc) {
        int len = static_cast<int>(cyc.size());
        if (state[len] == 'p') return;
        state[len] = 'p';
        rep.certificates[len] = cyc;
        queue_certs.push_back(cyc);
    };
    auto drain_chords = [&] {
        for (; queue_head < queue_certs.size(); ++queue_head) {
            std::vector<int> cyc = queue_certs[queue_head];
            int len = static_cast<int>(cyc.size());
            for (int i = 0; i < len; ++i)
                for (int j = i + 2; j < len; ++j) {
                    if (i == 0 && j == len - 1) continue;
                    if (!g.has_edge(cyc[i], cyc[j])) continue;
                    int inner = j - i + 1;
                    int outer = len - (j - i) + 1;
                    if (inner >= 3 && state[inner] == '?')
                        add_cert({cyc.begin() + i, cyc.begin() + j + 1});
                    if (outer >= 3 && state[outer] == '?') {
                        std::vector<int> sub(cyc.begin() + j, cyc.end());
                        sub.insert(sub.end(), cyc.begin(), cyc.begin() + i + 1);
                        add_cert(sub);
                    }
                }
        }
    };
    {
        SearchBudget slice{std::max<std::uint64_t>(budget.nodes / 4, 50'000)};
        auto ham = is_hamiltonian(g, slice, caps);
        if (ham.verdict == Verdict::Yes) add_cert(ham.cycle);
    }
    drain_chords();

    int open_count = 0;
    for (int len = 3; len <= n; ++len) open_count += state[len] == '?';
    std::uint64_t per_length =
        std::max<std::uint64_t>(5000, budget.nodes / std::max(1, open_count));
    for (int len = n; len >= 3; --len) {
        if (state[len] != '?') continue;
        auto r = cycle_of_length(g, len, SearchBudget{per_length}, caps);
        if (r.verdict == Verdict::Yes) {
            add_cert(r.cycle);
            drain_chords();
        } else if (r.verdict == Verdict::No) {
            state[len] = 'm';
        }
    }

    for (int len = 3; len <= n; ++len) {
        if (state[len] == 'p') rep.present_lengths.push_back(len);
        else if (state[len] == 'm') rep.missing_lengths.push_back(len);
        else rep.indeterminate_lengths.push_back(len);
    }
    return rep;
}

CircumferenceResult circumference(const Graph& g, const SearchBudget& budget,
                                  const CheckerCaps& caps) {
    int n = g.vertex_count();
    CircumferenceResult res;
    if (n == 0) {
        res.exact = Verdict::Yes;
        return res;
    }
    if (n <= caps.spectrum_dp_cap) {
        Spectrum sp;
        sp.run(g);
        res.exact = Verdict::Yes;
        for (int len = n; len >= 3; --len) {
            auto [mask, end] = sp.close_at[len];
            if (end >= 0) {
                res.length = len;
                res.witness = sp.rebuild(mask, end);
                return res;
            }
        }
        return res;  // acyclic
    }
    if (n > caps.search_cap) throw CapacityError("circumference: vertex count exceeds cap");
    BitGraph bg = make_bits(g);
    Counter counter{budget.nodes};
    LongCycleDfs dfs{bg, counter};
    dfs.run();
    res.length = dfs.best;
    res.witness = dfs.best_cycle;
    res.exact = counter.hit ? Verdict::Indeterminate : Verdict::Yes;
    return res;
}

CycleSearchResult directed_hamilton_cycle(const Digraph& d, const SearchBudget& budget,
                                          const CheckerCaps& caps) {
    int n = d.vertex_count();
    if (n < 2) throw std::invalid_argument("directed_hamilton_cycle: need n >= 2");
    CycleSearchResult res;
    for (int v = 0; v < n; ++v)
        if (d.out_neighbors(v).empty()) {
            res.verdict = Verdict::No;
            return res;
        }
    if (n > caps.search_cap)
        throw CapacityError("directed_hamilton_cycle: vertex count exceeds cap");

    BitDigraph bg = make_bits(d);
    int dp_cap = std::min(caps.exact_dp_cap, 24);
    Counter quick{n <= dp_cap ? kQuickDfsSlice : budget.nodes};
    DirHamDfs dfs{bg, quick};
    SStat s = dfs.run();
    if (s == SStat::Found) {
        res.verdict = Verdict::Yes;
        res.cycle = dfs.path;
        return res;
    }
    if (s == SStat::Exhausted) {
        res.verdict = Verdict::No;
        return res;
    }
    if (n > dp_cap) {
        res.verdict = Verdict::Indeterminate;
        return res;
    }
    DirSpectrum sp;
    sp.run(d);
    auto [mask, end] = sp.close_at[n];
    if (end < 0) {
        res.verdict = Verdict::No;
    } else {
        res.verdict = Verdict::Yes;
        res.cycle = sp.rebuild(mask, end);
    }
    return res;
}

CircumferenceResult longest_directed_cycle(const Digraph& d, const SearchBudget& budget,
                                           const CheckerCaps& caps) {
    int n = d.vertex_count();
    CircumferenceResult res;
    if (n == 0) {
        res.exact = Verdict::Yes;
        return res;
    }
    if (n <= caps.spectrum_dp_cap) {
        DirSpectrum sp;
        sp.run(d);
        res.exact = Verdict::Yes;
        for (int len = n; len >= 2; --len) {
            auto [mask, end] = sp.close_at[len];
            if (end >= 0) {
                res.length = len;
                res.witness = sp.rebuild(mask, end);
                return res;
            }
        }
        return res;
    }
    if (n > caps.search_cap)
        throw CapacityError("longest_directed_cycle: vertex count exceeds cap");
    BitDigraph bg = make_bits(d);
    Counter counter{budget.nodes};
    DirLongCycleDfs dfs{bg, counter};
    dfs.run();
    res.length = dfs.best;
    res.witness = dfs.best_cycle;
    res.exact = counter.hit ? Verdict::Indeterminate : Verdict::Yes;
    return res;
}

Verdict has_perfect_matching(const Graph& g, const CheckerCaps& caps) {
    int n = g.vertex_count();
    if (n % 2 == 1) return Verdict::No;
    if (n == 0) return Verdict::Yes;
    if (n > std::min(caps.exact_dp_cap, 24))
        throw CapacityError("has_perfect_matching: vertex count exceeds cap");
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    std::uint32_t all = (1u << n) - 1;
    std::vector<char> dp(1u << n, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        int v = __builtin_ctz(mask);
        std::uint32_t partners = adj[v] & mask;
        while (partners) {
            int u = __builtin_ctz(partners);
            partners &= partners - 1;
            if (dp[mask ^ (1u << v) ^ (1u << u)]) {
                dp[mask] = 1;
                break;
            }
        }
    }
    return dp[all] ? Verdict::Yes : Verdict::No;
}

namespace {

// Any simple cycle, from a non-tree edge of a spanning forest closed through
// the tree paths to the common ancestor; empty when acyclic. Works at any n.
std::vector<int> find_any_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (parent[v] == -2) {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    stack.push_back(v);
                    continue;
                }
                if (v == parent[u] || u == parent[v] || v > u) continue;
                std::vector<int> from_u, from_v;
                int x = u, y = v;
                while (depth[x] > depth[y]) {
                    from_u.push_back(x);
                    x = parent[x];
                }
                while (depth[y] > depth[x]) {
                    from_v.push_back(y);
                    y = parent[y];
                }
                while (x != y) {
                    from_u.push_back(x);
                    x = parent[x];
                    from_v.push_back(y);
                    y = parent[y];
                }
                from_u.push_back(x);
                from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
                if (from_u.size() >= 3) return from_u;
            }
        }
    }
    return {};
}

}  // namespace

CycleCoverResult cycle_cover_greedy(const Graph& g, const SearchBudget& budget,
                                    const CheckerCaps& caps) {
    CycleCoverResult res;
    VertexSet remaining;
    for (int v = 0; v < g.vertex_count(); ++v) remaining.push_back(v);

    while (remaining.size() >= 3) {
        auto sub = induced(g, remaining);
        if (sub.graph.edge_count() < static_cast<long long>(remaining.size()))
            if (connected_components(sub.graph).size() ==
                remaining.size() - sub.graph.edge_count())
                break;  // forest: no cycles left
        std::vector<int> local;
        if (sub.graph.vertex_count() <= caps.search_cap) {
            auto circ = circumference(sub.graph, budget, caps);
            local = circ.witness;
        } else {
            local = find_any_cycle(sub.graph);  // longest-first is out of reach here
        }
        if (local.size() < 3) break;
        std::vector<int> cyc;
        for (int v : local) cyc.push_back(sub.to_host[v]);
        res.cycles.push_back(cyc);
        std::vector<char> drop(g.vertex_count(), 0);
        for (int v : cyc) drop[v] = 1;
        VertexSet next;
        for (int v : remaining)
            if (!drop[v]) next.push_back(v);
        remaining = next;
    }
    res.uncovered = remaining;
    return res;
}

bool verify_cycle(const Graph& host, const std::vector<int>& cycle, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cycle.size() < 3) return fail("cycle shorter than 3");
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= host.vertex_count()) return fail("vertex out of range");
        if (seen[v]) return fail("repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (!host.has_edge(u, v))
            return fail("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return true;
}

bool verify_path(const Graph& host, const std::vector<int>& path, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (path.empty()) return fail("empty path");
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= host.vertex_count()) return fail("vertex out of range");
        if (seen[v]) return fail("repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!host.has_edge(path[i], path[i + 1]))
            return fail("missing edge " + std::to_string(path[i]) + "-" +
                        std::to_string(path[i + 1]));
    return true;
}

bool verify_directed_cycle(const Digraph& host, const std::vector<int>& cycle,
                           std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cycle.size() < 2) return fail("directed cycle shorter than 2");
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= host.vertex_count()) return fail("vertex out of range");
        if (seen[v]) return fail("repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (!host.has_arc(u, v))
            return fail("missing arc " + std::to_string(u) + "->" + std::to_string(v));
    }
    return true;
}

bool is_balanced_complete_bipartite(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || n % 2 != 0) return false;
    auto parts = bipartition_sizes(g, nullptr);
    if (!parts) return false;
    auto [a, b] = *parts;
    return a == b && g.edge_count() == static_cast<long long>(a) * b;
}

}  // namespace rpg
