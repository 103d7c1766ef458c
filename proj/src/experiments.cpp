#include "rpg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "rpg/random.hpp"

namespace rpg {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kZ95 = 1.959963984540054;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

std::string property_name(const Property& p) {
    switch (p.kind) {
        case PropertyKind::Hamiltonian: return "hamiltonian";
        case PropertyKind::Pancyclic: return "pancyclic";
        case PropertyKind::Connected: return "connected";
        case PropertyKind::Tough: return "tough:" + format_double(p.t);
        case PropertyKind::CircumferenceAtLeast:
            return "circumference>=" + std::to_string(p.length);
        case PropertyKind::PerfectMatching: return "perfect-matching";
    }
    return "?";
}

Property property_from_string(const std::string& text) {
    Property p;
    if (text == "hamiltonian") p.kind = PropertyKind::Hamiltonian;
    else if (text == "pancyclic") p.kind = PropertyKind::Pancyclic;
    else if (text == "connected") p.kind = PropertyKind::Connected;
    else if (text == "perfect-matching") p.kind = PropertyKind::PerfectMatching;
    else if (text.rfind("tough", 0) == 0) {
        p.kind = PropertyKind::Tough;
        auto colon = text.find(':');
        p.t = colon == std::string::npos ? 1.0 : std::stod(text.substr(colon + 1));
    } else if (text.rfind("circumference>=", 0) == 0) {
        p.kind = PropertyKind::CircumferenceAtLeast;
        p.length = std::stoi(text.substr(std::string("circumference>=").size()));
    } else {
        throw std::invalid_argument("unknown property '" + text + "'");
    }
    return p;
}

std::pair<double, double> wilson_interval(int successes, int trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double n = trials, phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

Verdict decide_property(const Graph& g, const Property& prop, const SearchBudget& budget,
                        const CheckerCaps& caps) {
    switch (prop.kind) {
        case PropertyKind::Connected:
            return is_connected(g) ? Verdict::Yes : Verdict::No;
        case PropertyKind::Hamiltonian:
            if (g.vertex_count() < 3) return Verdict::No;
            return is_hamiltonian(g, budget, caps).verdict;
        case PropertyKind::Pancyclic:
            return pancyclicity_report(g, budget, caps).pancyclic();
        case PropertyKind::Tough:
            return toughness_at_least(g, prop.t, caps).verdict;
        case PropertyKind::PerfectMatching:
            return has_perfect_matching(g, caps);
        case PropertyKind::CircumferenceAtLeast: {
            if (prop.length <= 0) return Verdict::Yes;
            auto c = circumference(g, budget, caps);
            if (c.length >= prop.length) return Verdict::Yes;  // witness in hand
            return c.exact == Verdict::Yes ? Verdict::No : Verdict::Indeterminate;
        }
    }
    return Verdict::Indeterminate;
}

SweepResult estimate_probability(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("sweep: need trials >= 1");
    for (size_t i = 1; i < cfg.p_grid.size(); ++i)
        if (cfg.p_grid[i] < cfg.p_grid[i - 1])
            throw std::invalid_argument("sweep: p grid must be ascending");
    Graph base = build_family(cfg.family);

    int cells = static_cast<int>(cfg.p_grid.size());
    std::vector<signed char> verdicts(static_cast<size_t>(cells) * cfg.trials, 0);
    auto run_range = [&](int from, int stride) {
        for (int idx = from; idx < cells * cfg.trials; idx += stride) {
            int cell = idx / cfg.trials, trial = idx % cfg.trials;
            std::uint64_t cell_key = cfg.couple_cells ? 0xC0FFEE : static_cast<std::uint64_t>(cell);
            Seed s{derive_seed(cfg.base_seed, cell_key, static_cast<std::uint64_t>(trial))};
            Graph trial_graph = perturb(base, cfg.p_grid[cell], s);
            Verdict v = decide_property(trial_graph, cfg.property, cfg.budget, cfg.caps);
            verdicts[idx] = v == Verdict::Yes ? 1 : (v == Verdict::No ? 0 : 2);
        }
    };
    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
        for (auto& th : pool) th.join();
    }

    SweepResult out;
    out.config = cfg;
    for (int cell = 0; cell < cells; ++cell) {
        CellResult c;
        c.p = cfg.p_grid[cell];
        for (int trial = 0; trial < cfg.trials; ++trial) {
            signed char v = verdicts[static_cast<size_t>(cell) * cfg.trials + trial];
            if (v == 1) ++c.successes;
            else if (v == 0) ++c.failures;
            else ++c.indeterminates;
        }
        c.estimate = static_cast<double>(c.successes) / cfg.trials;
        auto [lo, hi] = wilson_interval(c.successes, cfg.trials, kZ95);
        c.wilson_lo = lo;
        c.wilson_hi = hi;
        c.usable = 5 * c.indeterminates <= cfg.trials;  // <= 20%
        out.cells.push_back(c);
    }
    std::uint64_t h = mix64(cfg.base_seed);
    for (char ch : family_to_json(cfg.family)) h = mix64(h ^ static_cast<std::uint64_t>(ch));
    for (char ch : property_name(cfg.property)) h = mix64(h ^ static_cast<std::uint64_t>(ch));
    for (double p : cfg.p_grid) h = mix64(h ^ static_cast<std::uint64_t>(p * 1e18));
    h = mix64(h ^ static_cast<std::uint64_t>(cfg.trials));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    out.config_hash = buf;
    return out;
}

std::optional<double> closed_form_oracle(const FamilySpec& family, double p,
                                         const std::string& event) {
    bool clique_blocks = family.kind == FamilyKind::TwoCliques ||
                         family.kind == FamilyKind::BalancedCliques ||
                         family.kind == FamilyKind::CliqueForest ||
                         family.kind == FamilyKind::ToughnessCliques ||
                         family.kind == FamilyKind::MCliques;

    if (event == "no-crossing-edge" || event == "connected-by-crossing") {
        if (!clique_blocks) return std::nullopt;
        auto blocks = family_blocks(family);
        if (blocks.size() != 2) return std::nullopt;
        double pairs = static_cast<double>(blocks[0].size()) * blocks[1].size();
        double none = std::pow(1.0 - p, pairs);
        return event == "no-crossing-edge" ? none : 1.0 - none;
    }

    if (event == "some-clique-isolated") {
        if (!clique_blocks) return std::nullopt;
        auto blocks = family_blocks(family);
        if (blocks.size() > 20) return std::nullopt;
        int n = family.n;
        // inclusion-exclusion over block subsets, collapsed by distinct size
        std::vector<std::pair<long long, int>> groups;  // (size, count)
        {
            std::vector<long long> sizes;
            for (const auto& b : blocks) sizes.push_back(static_cast<long long>(b.size()));
            std::sort(sizes.begin(), sizes.end());
            for (size_t i = 0; i < sizes.size();) {
                size_t j = i;
                while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
                groups.emplace_back(sizes[i], static_cast<int>(j - i));
                i = j;
            }
        }
        double total = 0.0;
        std::vector<int> take(groups.size(), 0);
        auto rec = [&](auto&& self, size_t gi, double coeff, long long s1, long long s2,
                       int picked) -> void {
            if (gi == groups.size()) {
                if (picked == 0) return;
                double expo = static_cast<double>(n) * s1 - s2 -
                              (static_cast<double>(s1) * s1 - s2) / 2.0;
                double sign = picked % 2 == 1 ? 1.0 : -1.0;
                total += sign * coeff * std::pow(1.0 - p, expo);
                return;
            }
            auto [size, count] = groups[gi];
            double c = 1.0;
            for (int t = 0; t <= count; ++t) {
                self(self, gi + 1, coeff * c, s1 + static_cast<long long>(t) * size,
                     s2 + static_cast<long long>(t) * size * size, picked + t);
                c = c * (count - t) / (t + 1);
            }
        };
        rec(rec, 0, 1.0, 0, 0, 0);
        return total;
    }

    if (event == "attachment-rate" || event == "attachment-below-half") {
        if (family.kind != FamilyKind::IAB) return std::nullopt;
        auto blocks = family_blocks(family);
        long long i_size = static_cast<long long>(blocks[0].size());
        long long ib = i_size + static_cast<long long>(blocks[2].size());
        double rate = 1.0 - std::pow(1.0 - p, static_cast<double>(ib - 1));
        if (event == "attachment-rate") return rate;
        // binomial tail under per-vertex independence (shared I-I pairs are
        // a vanishing correction at desk-scale p)
        int nn = static_cast<int>(i_size);
        int cut = family.k / 2;
        double tail = 0.0;
        for (int j = 0; j < cut && j <= nn; ++j)
            tail += std::exp(log_choose(nn, j) + j * std::log(std::max(rate, 1e-300)) +
                             (nn - j) * std::log1p(-rate));
        return tail;
    }
    return std::nullopt;
}

namespace {

int count_successes(const Graph& base, const SweepConfig& cfg, double p) {
    int succ = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Seed s{derive_seed(cfg.base_seed, 0xC0FFEE, static_cast<std::uint64_t>(trial))};
        Graph trial_graph = perturb(base, p, s);
        if (decide_property(trial_graph, cfg.property, cfg.budget, cfg.caps) == Verdict::Yes)
            ++succ;
    }
    return succ;
}

}  // namespace

ThresholdEstimate find_threshold(const SweepConfig& cfg, double target) {
    if (cfg.p_grid.size() < 2)
        throw std::invalid_argument("find_threshold: need a bracketing grid");
    Graph base = build_family(cfg.family);
    double lo = cfg.p_grid.front(), hi = cfg.p_grid.back();
    ThresholdEstimate est;
    double flo = static_cast<double>(count_successes(base, cfg, lo)) / cfg.trials;
    double fhi = static_cast<double>(count_successes(base, cfg, hi)) / cfg.trials;
    est.probes = 2;
    if (!(flo < target && target <= fhi))
        throw std::invalid_argument("find_threshold: grid does not bracket the target");
    while (hi / lo > 1.1) {
        double mid = std::sqrt(lo * hi);
        double fmid = static_cast<double>(count_successes(base, cfg, mid)) / cfg.trials;
        ++est.probes;
        if (fmid >= target) hi = mid;
        else lo = mid;
    }
    est.p_lo = lo;
    est.p_hi = hi;
    est.p_star = std::sqrt(lo * hi);
    return est;
}

namespace {

double predicted_form(const FamilySpec& f) {
    double n = f.n;
    switch (f.kind) {
        case FamilyKind::CliqueForest:
            return std::log(static_cast<double>(f.k)) / (static_cast<double>(f.d) * n);
        case FamilyKind::ToughnessCliques:
            return std::log(n) / (n * static_cast<double>(f.k));
        case FamilyKind::BalancedCliques:
            return std::log(1.0 / f.delta) / (f.delta * n * n);
        case FamilyKind::TwoCliques:
            return 1.0 / (n * n);
        case FamilyKind::MCliques:
            return static_cast<double>(f.m) / (n * n);
        case FamilyKind::IAB:
            return 1.0 / (3.0 * n);
        default:
            return 1.0;
    }
}

}  // namespace

ScalingReport scaling_report(const SweepConfig& base, const std::string& axis,
                             const std::vector<double>& values) {
    ScalingReport rep;
    for (double v : values) {
        SweepConfig cfg = base;
        if (axis == "k") cfg.family.k = static_cast<int>(v);
        else if (axis == "d") cfg.family.d = static_cast<int>(v);
        else if (axis == "m") cfg.family.m = static_cast<int>(v);
        else if (axis == "n") cfg.family.n = static_cast<int>(v);
        else if (axis == "delta") cfg.family.delta = v;
        else throw std::invalid_argument("scaling_report: unknown axis '" + axis + "'");
        auto est = find_threshold(cfg);
        ScalingRow row;
        row.label = axis + "=" + format_double(v);
        row.value = v;
        row.p_star = est.p_star;
        row.predicted = predicted_form(cfg.family);
        row.ratio = row.p_star / row.predicted;
        rep.rows.push_back(row);
    }
    double rmin = 0, rmax = 0;
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        if (i == 0) rmin = rmax = rep.rows[i].ratio;
        rmin = std::min(rmin, rep.rows[i].ratio);
        rmax = std::max(rmax, rep.rows[i].ratio);
    }
    rep.ratio_spread = rmin > 0 ? rmax / rmin : 0;
    return rep;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "p,trials,success,fail,indeterminate,estimate,wilson_lo,wilson_hi\n";
    char buf[256];
    for (const auto& c : result.cells) {
        std::snprintf(buf, sizeof(buf), "%.10g,%d,%d,%d,%d,%.6f,%.6f,%.6f\n", c.p,
                      result.config.trials, c.successes, c.failures, c.indeterminates,
                      c.estimate, c.wilson_lo, c.wilson_hi);
        out << buf;
    }
}

std::string sweep_to_json(const SweepResult& result) {
    ordered_json j;
    j["family"] = ordered_json::parse(family_to_json(result.config.family));
    j["property"] = property_name(result.config.property);
    j["trials"] = result.config.trials;
    j["base_seed"] = result.config.base_seed;
    j["config_hash"] = result.config_hash;
    ordered_json cells = ordered_json::array();
    for (const auto& c : result.cells)
        cells.push_back({{"p", c.p},
                         {"success", c.successes},
                         {"fail", c.failures},
                         {"indeterminate", c.indeterminates},
                         {"estimate", c.estimate},
                         {"wilson_lo", c.wilson_lo},
                         {"wilson_hi", c.wilson_hi},
                         {"usable", c.usable}});
    j["cells"] = cells;
    return j.dump(2);
}

std::string threshold_to_json(const SweepConfig& cfg, const ThresholdEstimate& est) {
    ordered_json j;
    j["family"] = ordered_json::parse(family_to_json(cfg.family));
    j["property"] = property_name(cfg.property);
    j["trials"] = cfg.trials;
    j["base_seed"] = cfg.base_seed;
    j["p_star"] = est.p_star;
    j["bracket"] = {est.p_lo, est.p_hi};
    j["probes"] = est.probes;
    return j.dump(2);
}

std::string scaling_to_json(const ScalingReport& rep) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"label", r.label},
                        {"value", r.value},
                        {"p_star", r.p_star},
                        {"predicted", r.predicted},
                        {"ratio", r.ratio}});
    j["rows"] = rows;
    j["ratio_spread"] = rep.ratio_spread;
    return j.dump(2);
}

}  // namespace rpg
