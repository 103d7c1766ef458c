#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rpg/graph.hpp"

namespace rpg {

/// Raised when an exact checker is asked for more than its configured cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive searches are three-valued: a budget that runs out is reported
/// as Indeterminate, never silently folded into No.
enum class Verdict { Yes, No, Indeterminate };

std::string verdict_name(Verdict v);

struct SearchBudget {
    std::uint64_t nodes = 4'000'000;  // backtracking nodes per call
};

struct CheckerCaps {
    int exact_dp_cap = 24;      // bitmask DP limit for Hamilton searches
    int spectrum_dp_cap = 20;   // subset DP limit for full cycle spectra
    int search_cap = 64;        // hard limit for bitset backtracking
    int alpha_cap = 200;        // branch-and-bound independence cap
    int toughness_cap = 20;     // full separator enumeration cap
};

struct CycleSearchResult {
    Verdict verdict = Verdict::Indeterminate;
    std::vector<int> cycle;  // certificate when verdict == Yes
};

struct PathSearchResult {
    Verdict verdict = Verdict::Indeterminate;
    std::vector<int> path;
};

struct HamiltonConnectedResult {
    Verdict verdict = Verdict::Indeterminate;
    std::pair<int, int> failing_pair{-1, -1};  // first failing / indeterminate pair
};

struct PancyclicityReport {
    int n = 0;
    std::vector<int> present_lengths;
    std::vector<int> missing_lengths;
    std::vector<int> indeterminate_lengths;
    std::map<int, std::vector<int>> certificates;  // length -> cycle

    Verdict pancyclic() const {
        if (!missing_lengths.empty()) return Verdict::No;
        if (!indeterminate_lengths.empty()) return Verdict::Indeterminate;
        return Verdict::Yes;
    }
};

struct CircumferenceResult {
    Verdict exact = Verdict::Indeterminate;  // Yes: length is the true circumference
    int length = 0;                          // best cycle length found (0 = none found)
    std::vector<int> witness;                // empty when acyclic
};

struct AlphaResult {
    int alpha = 0;
    VertexSet witness;
};

struct ConnectivityResult {
    int kappa = 0;
    bool complete = false;  // complete graphs have no cut; kappa = n-1
    VertexSet cut;          // a minimum vertex cut when not complete
};

/// Minimum of |S| / components(G-S) over separating sets S, as an exact
/// rational. separable == false means no separating set exists (complete
/// graph); toughness is +infinity by convention.
struct ToughnessReport {
    bool separable = false;
    long long witness_size = 0;
    long long component_count = 1;
    VertexSet witness;

    double value() const {
        return static_cast<double>(witness_size) / static_cast<double>(component_count);
    }
};

struct ToughnessCheck {
    Verdict verdict = Verdict::Indeterminate;
    VertexSet violator;  // separating set breaking t-toughness when verdict == No
};

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left
};

struct ExpanderResult {
    bool ok = false;
    VertexSet violator;  // smallest violating set when !ok
};

struct CycleCoverResult {
    std::vector<std::vector<int>> cycles;
    VertexSet uncovered;

    long long quantity() const {
        return static_cast<long long>(cycles.size()) + static_cast<long long>(uncovered.size());
    }
};

// --- independence ---

/// Exact maximum independent set via branch and bound.
AlphaResult independence_number(const Graph& g, const CheckerCaps& caps = {});

// --- connectivity ---

/// Exact vertex connectivity via unit-capacity max flow between
/// non-adjacent pairs; complete graphs report n-1 and the marker.
ConnectivityResult vertex_connectivity(const Graph& g);

/// Internally vertex-disjoint path count between non-adjacent s, t.
int local_connectivity(const Graph& g, int s, int t, int cutoff = -1);

// --- cycles ---

CycleSearchResult is_hamiltonian(const Graph& g, const SearchBudget& budget = {},
                                 const CheckerCaps& caps = {});
PathSearchResult hamilton_path_between(const Graph& g, int u, int v,
                                       const SearchBudget& budget = {},
                                       const CheckerCaps& caps = {});
HamiltonConnectedResult is_hamilton_connected(const Graph& g, const SearchBudget& budget = {},
                                              const CheckerCaps& caps = {});
PancyclicityReport pancyclicity_report(const Graph& g, const SearchBudget& budget = {},
                                       const CheckerCaps& caps = {});
CircumferenceResult circumference(const Graph& g, const SearchBudget& budget = {},
                                  const CheckerCaps& caps = {});
/// Cycle of exactly the given length, if one can be found / refuted.
CycleSearchResult cycle_of_length(const Graph& g, int length, const SearchBudget& budget = {},
                                  const CheckerCaps& caps = {});

CycleSearchResult directed_hamilton_cycle(const Digraph& d, const SearchBudget& budget = {},
                                          const CheckerCaps& caps = {});
CircumferenceResult longest_directed_cycle(const Digraph& d, const SearchBudget& budget = {},
                                           const CheckerCaps& caps = {});

/// Exact perfect matching existence on general graphs (subset DP, n <= dp cap).
Verdict has_perfect_matching(const Graph& g, const CheckerCaps& caps = {});

// --- toughness ---

/// Full enumeration of separating sets; exact for n <= toughness cap.
ToughnessReport toughness_exact(const Graph& g, const CheckerCaps& caps = {});

/// Decides whether g is t-tough; exact for n <= toughness cap. Beyond the
/// cap, samples separating sets: No is sound, Yes degrades to Indeterminate.
ToughnessCheck toughness_at_least(const Graph& g, double t, const CheckerCaps& caps = {},
                                  std::uint64_t sample_seed = 0, int samples = 20000);

// --- matching / expansion ---

MatchingResult bipartite_max_matching(int left, int right,
                                      const std::vector<std::pair<int, int>>& edges);

/// (k,d)-expander test: |N(S)| >= d|S| for every set of size <= k.
/// Exhaustive; throws CapacityError when the subset count exceeds the budget.
ExpanderResult expander_check(const Graph& g, int k, double d,
                              std::uint64_t subset_budget = 20'000'000);

/// Greedy vertex-disjoint cycle cover: repeatedly removes the longest cycle
/// found within budget. Reports cycles plus the uncovered remainder.
CycleCoverResult cycle_cover_greedy(const Graph& g, const SearchBudget& budget = {},
                                    const CheckerCaps& caps = {});

// --- certificate verification ---

bool verify_cycle(const Graph& host, const std::vector<int>& cycle, std::string* why = nullptr);
bool verify_path(const Graph& host, const std::vector<int>& path, std::string* why = nullptr);
bool verify_directed_cycle(const Digraph& host, const std::vector<int>& cycle,
                           std::string* why = nullptr);

/// Exact label check for K_{n/2,n/2}, the lone non-pancyclic graph among
/// those with minimum degree n/2.
bool is_balanced_complete_bipartite(const Graph& g);

}  // namespace rpg
