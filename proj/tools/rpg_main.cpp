// rpg: generate, perturb, check, decompose, construct and measure randomly
// perturbed graphs. Exit codes: 0 success / property holds, 1 property fails
// or staged failure, 2 indeterminate or capacity, 64 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpg/decompose.hpp"
#include "rpg/experiments.hpp"
#include "rpg/families.hpp"
#include "rpg/pipelines.hpp"
#include "rpg/random.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "rpg 0.1.0";

int verdict_exit(rpg::Verdict v) {
    switch (v) {
        case rpg::Verdict::Yes: return 0;
        case rpg::Verdict::No: return 1;
        case rpg::Verdict::Indeterminate: return 2;
    }
    return 2;
}

std::uint64_t parse_seed(const std::string& text) {
    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0)
        return std::stoull(text.substr(2), nullptr, 16);
    return std::stoull(text);
}

void emit_manifest(const std::string& command, const std::vector<std::string>& args,
                   const std::string& manifest_path) {
    ordered_json j;
    j["tool"] = "rpg";
    j["version"] = kVersion;
    j["command"] = command;
    j["args"] = args;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& a : args)
        for (char c : a) h = rpg::mix64(h ^ static_cast<std::uint64_t>(c));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    j["config_hash"] = buf;
    std::cerr << j.dump() << "\n";
    if (!manifest_path.empty()) {
        std::ofstream out(manifest_path);
        out << j.dump(2) << "\n";
    }
}

void print_vertex_list(const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) std::cout << (i ? " " : "") << vs[i];
    std::cout << "\n";
}

rpg::SweepConfig sweep_config_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ordered_json j = ordered_json::parse(in);
    rpg::SweepConfig cfg;
    cfg.family = rpg::family_from_json(j.at("family").dump());
    cfg.property = rpg::property_from_string(j.at("property").get<std::string>());
    if (j.contains("p_grid")) {
        cfg.p_grid = j["p_grid"].get<std::vector<double>>();
    } else {
        auto g = j.at("grid");
        double lo = g.at("min").get<double>(), hi = g.at("max").get<double>();
        int count = g.at("count").get<int>();
        bool log_spaced = g.value("log", true);
        for (int i = 0; i < count; ++i) {
            double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
            cfg.p_grid.push_back(log_spaced ? lo * std::pow(hi / lo, f)
                                            : lo + (hi - lo) * f);
        }
    }
    cfg.trials = j.value("trials", 1000);
    cfg.base_seed = j.value("base_seed", 1ULL);
    if (j.contains("budget")) cfg.budget.nodes = j["budget"].get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
    cfg.couple_cells = j.value("couple_cells", false);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomly perturbed graph toolkit"};
    app.require_subcommand(1);
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write the run manifest to this file");

    // generate
    auto* gen = app.add_subcommand("generate", "build a seed-graph family");
    std::string gen_family, gen_out;
    rpg::FamilySpec spec;
    gen->add_option("--family", gen_family, "family kind")->required();
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--k", spec.k, "k parameter");
    gen->add_option("--d", spec.d, "d parameter");
    gen->add_option("--m", spec.m, "m parameter");
    gen->add_option("--delta", spec.delta, "delta parameter");
    gen->add_option("--c", spec.c, "c parameter");
    gen->add_option("--out", gen_out, "output graph file")->required();

    // perturb
    auto* pert = app.add_subcommand("perturb", "union a graph with G(n,p)");
    std::string pert_in, pert_out, pert_seed = "1";
    double pert_p = 0.0;
    pert->add_option("--in", pert_in, "input graph")->required();
    pert->add_option("--p", pert_p, "edge probability")->required();
    pert->add_option("--seed", pert_seed, "seed (decimal or 0x hex)");
    pert->add_option("--out", pert_out, "output graph file")->required();

    // check
    auto* chk = app.add_subcommand("check", "decide a property exactly");
    std::string chk_prop, chk_in;
    std::uint64_t chk_budget = rpg::SearchBudget{}.nodes;
    double chk_t = 1.0;
    int chk_k = 1;
    double chk_d = 2.0;
    int chk_len = 0;
    chk->add_option("--property", chk_prop,
                    "hamiltonian|pancyclic|toughness|alpha|kappa|circumference|expander|"
                    "connected|hamilton-connected|perfect-matching")
        ->required();
    chk->add_option("--in", chk_in, "input graph")->required();
    chk->add_option("--budget", chk_budget, "search node budget");
    chk->add_option("--t", chk_t, "toughness target");
    chk->add_option("--k", chk_k, "expander set-size bound");
    chk->add_option("--d", chk_d, "expander expansion factor");
    chk->add_option("--length", chk_len, "target cycle length");
    std::string chk_format = "text";
    chk->add_option("--format", chk_format, "text|json");

    // decompose
    auto* dec = app.add_subcommand("decompose", "connectivity decompositions");
    std::string dec_method, dec_in, dec_seed = "1";
    int dec_alpha = 0, dec_retries = 64;
    dec->add_option("--method", dec_method, "degree|alpha|bisect")->required();
    dec->add_option("--in", dec_in, "input graph")->required();
    dec->add_option("--alpha-bound", dec_alpha, "independence bound (alpha method)");
    dec->add_option("--retries", dec_retries, "bisection retries");
    dec->add_option("--seed", dec_seed, "seed");

    // construct
    auto* con = app.add_subcommand("construct", "run a cycle-building pipeline");
    std::string con_pipe, con_graph, con_seed = "1";
    double con_p = 0.0, con_eps = 0.25, con_delta = 0.0;
    int con_alpha = 0;
    con->add_option("--pipeline", con_pipe, "block-linkage|matched-blocks|long-cycle")
        ->required();
    con->add_option("--graph", con_graph, "seed graph file")->required();
    con->add_option("--p", con_p, "perturbation probability")->required();
    con->add_option("--seed", con_seed, "seed");
    con->add_option("--epsilon", con_eps, "epsilon (long-cycle)");
    con->add_option("--alpha-bound", con_alpha, "independence bound");
    con->add_option("--delta-ratio", con_delta, "minimum degree ratio override");

    // sweep / threshold / scaling
    auto* swp = app.add_subcommand("sweep", "Monte Carlo probability estimates");
    std::string swp_config, swp_out;
    int swp_workers = 0;
    swp->add_option("--config", swp_config, "sweep config JSON")->required();
    swp->add_option("--out", swp_out, "output directory")->required();
    swp->add_option("--workers", swp_workers, "worker threads");

    auto* thr = app.add_subcommand("threshold", "bisect for the p where P = 1/2");
    std::string thr_config;
    double thr_target = 0.5;
    thr->add_option("--config", thr_config, "sweep config JSON")->required();
    thr->add_option("--target", thr_target, "crossing target");

    auto* scl = app.add_subcommand("scaling", "thresholds along a parameter axis");
    std::string scl_config, scl_axis;
    scl->add_option("--config", scl_config, "sweep config JSON")->required();
    scl->add_option("--axis", scl_axis, "axis spec, e.g. k=8,16,32")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    try {
        if (*gen) {
            emit_manifest("generate", raw_args, manifest_path);
            spec.kind = rpg::family_kind_from_name(gen_family);
            rpg::write_graph_file(gen_out, rpg::build_family(spec));
            auto pred = rpg::predicted_properties(spec);
            std::cout << "min_degree " << pred.min_degree << "\nindependence_number "
                      << pred.independence_number << "\ncomponents " << pred.component_count
                      << "\n";
            return 0;
        }
        if (*pert) {
            emit_manifest("perturb", raw_args, manifest_path);
            auto g = rpg::read_graph_file(pert_in);
            rpg::write_graph_file(pert_out,
                                  rpg::perturb(g, pert_p, rpg::Seed{parse_seed(pert_seed)}));
            return 0;
        }
        if (*chk) {
            emit_manifest("check", raw_args, manifest_path);
            auto g = rpg::read_graph_file(chk_in);
            rpg::SearchBudget budget{chk_budget};
            rpg::CheckerCaps caps;
            bool as_json = chk_format == "json";
            auto emit = [&](rpg::Verdict v, const std::vector<int>& certificate) {
                if (as_json) {
                    ordered_json j;
                    j["property"] = chk_prop;
                    j["verdict"] = rpg::verdict_name(v);
                    j["certificate"] = certificate;
                    std::cout << j.dump() << "\n";
                } else if (v == rpg::Verdict::Yes && !certificate.empty()) {
                    print_vertex_list(certificate);
                }
                return verdict_exit(v);
            };
            if (chk_prop == "hamiltonian") {
                auto r = rpg::is_hamiltonian(g, budget, caps);
                return emit(r.verdict, r.cycle);
            }
            if (chk_prop == "pancyclic") {
                auto r = rpg::pancyclicity_report(g, budget, caps);
                std::cout << "present " << r.present_lengths.size() << " missing "
                          << r.missing_lengths.size() << " indeterminate "
                          << r.indeterminate_lengths.size() << "\n";
                return verdict_exit(r.pancyclic());
            }
            if (chk_prop == "toughness") {
                auto r = rpg::toughness_at_least(g, chk_t, caps);
                if (r.verdict == rpg::Verdict::No) print_vertex_list(r.violator);
                return verdict_exit(r.verdict);
            }
            if (chk_prop == "alpha") {
                auto r = rpg::independence_number(g, caps);
                std::cout << r.alpha << "\n";
                print_vertex_list(r.witness);
                return 0;
            }
            if (chk_prop == "kappa") {
                auto r = rpg::vertex_connectivity(g);
                std::cout << r.kappa << (r.complete ? " complete" : "") << "\n";
                if (!r.complete) print_vertex_list(r.cut);
                return 0;
            }
            if (chk_prop == "circumference") {
                auto r = rpg::circumference(g, budget, caps);
                std::cout << r.length << "\n";
                if (!r.witness.empty()) print_vertex_list(r.witness);
                if (chk_len > 0) return r.length >= chk_len ? 0 : 1;
                return verdict_exit(r.exact);
            }
            if (chk_prop == "expander") {
                auto r = rpg::expander_check(g, chk_k, chk_d);
                if (!r.ok) print_vertex_list(r.violator);
                return r.ok ? 0 : 1;
            }
            if (chk_prop == "connected")
                return emit(rpg::is_connected(g) ? rpg::Verdict::Yes : rpg::Verdict::No, {});
            if (chk_prop == "hamilton-connected") {
                auto r = rpg::is_hamilton_connected(g, budget, caps);
                if (r.verdict != rpg::Verdict::Yes)
                    std::cout << r.failing_pair.first << " " << r.failing_pair.second << "\n";
                return verdict_exit(r.verdict);
            }
            if (chk_prop == "perfect-matching")
                return verdict_exit(rpg::has_perfect_matching(g, caps));
            std::cerr << "unknown property '" << chk_prop << "'\n";
            return 64;
        }
        if (*dec) {
            emit_manifest("decompose", raw_args, manifest_path);
            auto g = rpg::read_graph_file(dec_in);
            ordered_json j;
            if (dec_method == "degree") {
                auto r = rpg::partition_by_min_degree(g);
                j["method"] = "degree";
                j["ok"] = r.ok;
                j["failure"] = r.failure;
                ordered_json blocks = ordered_json::array();
                for (const auto& b : r.partition.blocks)
                    blocks.push_back({{"vertices", b.vertices},
                                      {"verified_connectivity", b.verified_connectivity}});
                j["blocks"] = blocks;
                std::cout << j.dump(2) << "\n";
                return r.ok ? 0 : 1;
            }
            if (dec_method == "alpha") {
                int alpha = dec_alpha > 0 ? dec_alpha : rpg::independence_number(g).alpha;
                auto r = rpg::partition_by_independence(g, alpha);
                j["method"] = "alpha";
                j["ok"] = r.ok;
                j["failure"] = r.failure;
                j["alpha_bound"] = alpha;
                if (r.stuck_vertex) j["stuck_vertex"] = *r.stuck_vertex;
                j["conclusions"] = {{"block_count", r.conclusions.block_count_ok},
                                    {"large_cover", r.conclusions.large_cover_ok},
                                    {"block_size", r.conclusions.block_size_ok},
                                    {"connectivity", r.conclusions.connectivity_ok}};
                j["large_blocks"] = r.large_blocks;
                ordered_json blocks = ordered_json::array();
                for (const auto& b : r.partition.blocks)
                    blocks.push_back({{"vertices", b.vertices},
                                      {"verified_connectivity", b.verified_connectivity}});
                j["blocks"] = blocks;
                std::cout << j.dump(2) << "\n";
                return r.ok ? 0 : 1;
            }
            if (dec_method == "bisect") {
                auto r = rpg::connectivity_bisection(g, dec_retries,
                                                     rpg::Seed{parse_seed(dec_seed)});
                j["method"] = "bisect";
                j["ok"] = r.ok;
                j["kappa"] = r.kappa;
                j["attempts"] = r.attempts_used;
                j["failure"] = r.failure;
                j["side1"] = r.side1;
                j["side2"] = r.side2;
                std::cout << j.dump(2) << "\n";
                return r.ok ? 0 : 1;
            }
            std::cerr << "unknown method '" << dec_method << "'\n";
            return 64;
        }
        if (*con) {
            emit_manifest("construct", raw_args, manifest_path);
            auto g = rpg::read_graph_file(con_graph);
            auto r = rpg::sample_gnp(g.vertex_count(), con_p, rpg::Seed{parse_seed(con_seed)});
            rpg::PipelineConfig cfg;
            cfg.seed = parse_seed(con_seed);
            cfg.epsilon = con_eps;
            cfg.alpha_bound = con_alpha;
            cfg.delta_ratio = con_delta;
            rpg::PipelineTrace trace;
            if (con_pipe == "block-linkage")
                trace = rpg::block_linkage_hamiltonicity(g, r, cfg);
            else if (con_pipe == "matched-blocks")
                trace = rpg::matched_blocks_hamiltonicity(g, r, cfg);
            else if (con_pipe == "long-cycle")
                trace = rpg::long_cycle_from_paths(g, r, con_eps, cfg);
            else {
                std::cerr << "unknown pipeline '" << con_pipe << "'\n";
                return 64;
            }
            std::cout << trace.to_json() << "\n";
            return trace.success ? 0 : 1;
        }
        if (*swp) {
            emit_manifest("sweep", raw_args, manifest_path);
            auto cfg = sweep_config_from_json(swp_config);
            if (swp_workers > 0) cfg.workers = swp_workers;
            auto result = rpg::estimate_probability(cfg);
            std::filesystem::create_directories(swp_out);
            {
                std::ofstream csv(swp_out + "/results.csv");
                rpg::write_sweep_csv(csv, result);
            }
            {
                std::ofstream js(swp_out + "/results.json");
                js << rpg::sweep_to_json(result) << "\n";
            }
            std::cout << swp_out << "/results.csv\n";
            return 0;
        }
        if (*thr) {
            emit_manifest("threshold", raw_args, manifest_path);
            auto cfg = sweep_config_from_json(thr_config);
            auto est = rpg::find_threshold(cfg, thr_target);
            std::cout << rpg::threshold_to_json(cfg, est) << "\n";
            return 0;
        }
        if (*scl) {
            emit_manifest("scaling", raw_args, manifest_path);
            auto cfg = sweep_config_from_json(scl_config);
            auto eq = scl_axis.find('=');
            if (eq == std::string::npos) {
                std::cerr << "axis must look like k=8,16,32\n";
                return 64;
            }
            std::string axis = scl_axis.substr(0, eq);
            std::vector<double> values;
            std::stringstream ss(scl_axis.substr(eq + 1));
            for (std::string tok; std::getline(ss, tok, ',');) values.push_back(std::stod(tok));
            auto rep = rpg::scaling_report(cfg, axis, values);
            std::cout << rpg::scaling_to_json(rep) << "\n";
            return 0;
        }
    } catch (const rpg::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 64;
}
