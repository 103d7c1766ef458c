#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpg/checkers.hpp"
#include "rpg/families.hpp"
#include "rpg/graph.hpp"

namespace rpg {

enum class PropertyKind {
    Hamiltonian,
    Pancyclic,
    Connected,
    Tough,                 // t-tough for the configured t
    CircumferenceAtLeast,  // longest cycle >= length
    PerfectMatching,
};

struct Property {
    PropertyKind kind = PropertyKind::Connected;
    double t = 1.0;
    int length = 0;
};

std::string property_name(const Property& p);
Property property_from_string(const std::string& text);

struct SweepConfig {
    FamilySpec family;
    Property property;
    std::vector<double> p_grid;  // ascending
    int trials = 1000;
    std::uint64_t base_seed = 1;
    SearchBudget budget;
    CheckerCaps caps;
    int workers = 1;
    // Reuse one seed set across grid cells: estimates become exactly
    // monotone in p for monotone properties.
    bool couple_cells = false;
};

struct CellResult {
    double p = 0;
    int successes = 0;
    int failures = 0;
    int indeterminates = 0;
    double estimate = 0;  // successes / trials
    double wilson_lo = 0;
    double wilson_hi = 0;
    bool usable = true;  // false when indeterminates exceed 20%
};

struct SweepResult {
    SweepConfig config;
    std::vector<CellResult> cells;
    std::string config_hash;
};

/// Wilson score interval for successes/trials at normal quantile z.
std::pair<double, double> wilson_interval(int successes, int trials, double z);

/// Decides the property on one graph within the configured budgets.
Verdict decide_property(const Graph& g, const Property& prop, const SearchBudget& budget,
                        const CheckerCaps& caps);

/// Monte Carlo estimate of P(property holds for family union G(n,p)) on the
/// whole grid. Per-trial seeds derive from (base_seed, cell, trial), so runs
/// are reproducible and embarrassingly parallel.
SweepResult estimate_probability(const SweepConfig& cfg);

/// Exact probability of a named structural event, when a closed form exists:
///   "no-crossing-edge"       two-part families: no random edge between parts
///   "connected-by-crossing"  complement of the above
///   "some-clique-isolated"   inclusion-exclusion over clique blocks
///   "attachment-below-half"  IAB: P(#attached I-vertices < floor(k/2)),
///                            independent-approximation binomial tail
///   "attachment-rate"        IAB: per-vertex attachment probability
std::optional<double> closed_form_oracle(const FamilySpec& family, double p,
                                         const std::string& event);

struct ThresholdEstimate {
    double p_star = 0;
    double p_lo = 0;
    double p_hi = 0;
    int probes = 0;
};

/// Bisection for the p where the property's success estimate crosses the
/// target, reusing one coupled seed set across probes, until the bracket
/// ratio drops below 1.1. Requires estimate(min grid) < target <= estimate(max).
ThresholdEstimate find_threshold(const SweepConfig& cfg, double target = 0.5);

struct ScalingRow {
    std::string label;
    double value = 0;      // swept parameter value
    double p_star = 0;
    double predicted = 0;  // theory form at constant 1
    double ratio = 0;      // p_star / predicted
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double ratio_spread = 0;  // max ratio / min ratio
};

/// Thresholds along one parameter axis ("k", "d", "m", "n", "delta"),
/// against the matching theoretical form.
ScalingReport scaling_report(const SweepConfig& base, const std::string& axis,
                             const std::vector<double>& values);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);
std::string threshold_to_json(const SweepConfig& cfg, const ThresholdEstimate& est);
std::string scaling_to_json(const ScalingReport& rep);

}  // namespace rpg
