#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eclipse/dataset_io.hpp"

namespace {

// Exit codes: 0 success / no attack, 1 attack detected, 2 usage error,
// 3 data error, 4 degenerate statistic.
constexpr int kExitOk = 0;
constexpr int kExitAttack = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

struct ScenarioFlags {
    eclipse::AttackScenario scenario;
    std::string preset;

    void apply_preset() {
        if (preset.empty()) return;
        if (preset != "paper-iv") {
            throw CLI::ValidationError("--preset", "unknown preset: " + preset);
        }
        scenario.p = 100;
        scenario.q = 5;
        scenario.n = 1000;
        scenario.rows_used = 4;
        scenario.victims = {0};
        scenario.attackers = {98, 99};
    }
};

void add_scenario_options(CLI::App* cmd, ScenarioFlags& f) {
    cmd->add_option("--preset", f.preset,
                    "named scenario preset (paper-iv: p=100 q=5 n=1000 rows=4, "
                    "victim 0, attackers 98,99)");
    cmd->add_option("--p", f.scenario.p, "vertex count");
    cmd->add_option("--q", f.scenario.q, "out-degree per vertex");
    cmd->add_option("--n", f.scenario.n, "sequence length");
    cmd->add_option("--rows", f.scenario.rows_used,
                    "retained rows of the adjacency matrix (0 = all)");
    cmd->add_flag("--attack", f.scenario.attack, "generate an attacked sequence");
    cmd->add_option("--tau", f.scenario.tau, "1-based attack onset index");
    cmd->add_option("--victims", f.scenario.victims, "victim vertex indices (0-based)")
        ->delimiter(',');
    cmd->add_option("--attackers", f.scenario.attackers,
                    "attacker vertex indices (0-based)")
        ->delimiter(',');
    cmd->add_option("--victim-prob", f.scenario.victim_edge_prob,
                    "per-attacker probability of forcing each victim edge");
    cmd->add_option("--seed", f.scenario.seed, "master RNG seed");
}

double parse_snr(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::string snr_label(double snr) {
    if (std::isinf(snr)) return "inf";
    std::ostringstream os;
    os << snr;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"eclipse-detect: non-parametric eclipse attack detection on "
                 "simulated blockchain communication networks"};
    app.require_subcommand(1);

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "generate a BCN dataset file");
    ScenarioFlags sim_flags;
    add_scenario_options(sim, sim_flags);
    std::string sim_out;
    std::string sim_snr = "inf";
    sim->add_option("--snr", sim_snr, "observation SNR (edge survival 1-1/snr), or inf");
    sim->add_option("--out", sim_out, "output dataset path")->required();

    // --- detect ---
    auto* det = app.add_subcommand("detect", "run the detector on a dataset file");
    std::string det_input, det_out, det_curve, det_cache;
    std::string det_mode = "euclidean";
    eclipse::DetectorConfig det_cfg;
    det->add_option("--input", det_input, "dataset file")->required();
    det->add_option("--alpha", det_cfg.alpha, "significance level");
    det->add_option("--delta", det_cfg.delta, "endpoint trimming parameter");
    det->add_option("--jl-dim", det_cfg.jl_dim,
                    "JL target dimension (0 = no projection)");
    det->add_option("--epsilon", det_cfg.epsilon, "JL distortion parameter");
    det->add_option("--mean-mode", det_mode, "euclidean | sample-restricted");
    det->add_option("--quantile-paths", det_cfg.quantile_paths,
                    "Monte-Carlo paths for the bridge quantile");
    det->add_option("--grid", det_cfg.quantile_grid,
                    "quantile time grid (0 = sequence length)");
    det->add_option("--seed", det_cfg.quantile_seed,
                    "seed for quantile simulation and JL map");
    det->add_option("--out", det_out, "write the detection report as JSON");
    det->add_option("--curve", det_curve, "write the statistic curve as CSV");
    det->add_option("--cache", det_cache, "bridge quantile cache file");

    // --- quantile ---
    auto* qu = app.add_subcommand("quantile",
                                  "print the Brownian-bridge max quantile");
    double qu_alpha = 0.05, qu_delta = 0.1;
    std::size_t qu_grid = 1000, qu_paths = 10000;
    std::uint64_t qu_seed = 20240001;
    std::string qu_cache = "bridge_quantile_cache.json";
    qu->add_option("--alpha", qu_alpha, "significance level");
    qu->add_option("--delta", qu_delta, "endpoint trimming parameter");
    qu->add_option("--grid", qu_grid, "time grid points");
    qu->add_option("--paths", qu_paths, "Monte-Carlo paths");
    qu->add_option("--seed", qu_seed, "RNG seed");
    qu->add_option("--cache", qu_cache, "cache file ('' disables caching)");

    // --- roc ---
    auto* roc = app.add_subcommand("roc", "ROC curves over a list of SNR values");
    ScenarioFlags roc_flags;
    add_scenario_options(roc, roc_flags);
    std::vector<std::string> roc_snrs{"inf"};
    std::size_t roc_trials = 50;
    double roc_delta = 0.1;
    std::string roc_out = "roc";
    roc->add_option("--snr", roc_snrs, "comma-separated SNR values (inf allowed)")
        ->delimiter(',');
    roc->add_option("--trials", roc_trials, "trials per class per SNR");
    roc->add_option("--delta", roc_delta, "endpoint trimming parameter");
    roc->add_option("--out", roc_out, "output prefix for CSV/JSON files");

    // --- compare-stat ---
    auto* cmp = app.add_subcommand(
        "compare-stat", "trial-averaged raw vs projected statistic curves");
    ScenarioFlags cmp_flags;
    add_scenario_options(cmp, cmp_flags);
    std::size_t cmp_trials = 50, cmp_k = 100;
    double cmp_eps = 0.7, cmp_delta = 0.1;
    std::string cmp_out = "compare_stat.csv";
    std::string cmp_mode = "euclidean";
    cmp->add_option("--mean-mode", cmp_mode,
                    "raw-arm mean estimator: euclidean | sample-restricted "
                    "(projected arm is always euclidean)");
    cmp->add_option("--trials", cmp_trials, "number of paired trials");
    cmp->add_option("--k", cmp_k, "JL target dimension");
    cmp->add_option("--epsilon", cmp_eps, "JL distortion parameter");
    cmp->add_option("--delta", cmp_delta, "endpoint trimming parameter");
    cmp->add_option("--out", cmp_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim->parsed()) {
            sim_flags.apply_preset();
            auto& sc = sim_flags.scenario;
            if (sc.attack && sc.tau == 0) {
                std::cerr << "simulate: --attack requires --tau\n";
                return kExitUsage;
            }
            eclipse::GraphSequence seq = eclipse::generate_sequence(sc);
            const double snr = parse_snr(sim_snr);
            if (!std::isinf(snr)) {
                eclipse::Rng rng = eclipse::make_rng(sc.seed, 0x6e6f6973);
                seq = eclipse::apply_observation_noise(seq, snr, rng);
            }
            eclipse::write_dataset_file(sim_out, seq);
            std::cout << "wrote " << sim_out << ": p=" << seq.p << " q=" << seq.q
                      << " n=" << seq.size() << " rows=" << seq.rows_used
                      << " snr=" << snr_label(seq.snr)
                      << " attack=" << (sc.attack ? 1 : 0);
            if (sc.attack) std::cout << " tau=" << sc.tau;
            std::cout << "\n";
            return kExitOk;
        }

        if (det->parsed()) {
            if (det_mode == "euclidean") {
                det_cfg.mean_mode = eclipse::MeanMode::euclidean;
            } else if (det_mode == "sample-restricted") {
                det_cfg.mean_mode = eclipse::MeanMode::sample_restricted;
            } else {
                std::cerr << "detect: unknown --mean-mode '" << det_mode << "'\n";
                return kExitUsage;
            }
            det_cfg.use_projection = det_cfg.jl_dim > 0;
            det_cfg.jl_seed = det_cfg.quantile_seed;

            const eclipse::GraphSequence seq = eclipse::read_dataset_file(det_input);
            if (!det_cache.empty()) {
                const std::size_t grid = det_cfg.quantile_grid == 0
                                             ? seq.size()
                                             : det_cfg.quantile_grid;
                det_cfg.threshold_override =
                    eclipse::cached_bridge_quantile(det_cache, det_cfg.alpha,
                                                    det_cfg.delta, grid,
                                                    det_cfg.quantile_paths,
                                                    det_cfg.quantile_seed)
                        .quantile;
            }
            const eclipse::DetectionReport report = eclipse::detect(seq, det_cfg);

            if (!det_out.empty()) {
                std::ofstream os(det_out);
                os << eclipse::report_to_json(report).dump(2) << "\n";
            }
            if (!det_curve.empty()) {
                std::ofstream os(det_curve);
                eclipse::write_curve_csv(os, report.curve);
            }
            if (report.detected) {
                std::cout << "attack detected at n*=" << *report.tau_hat
                          << " (max T=" << report.max_scaled_stat
                          << ", threshold=" << report.threshold << ")\n";
                return kExitAttack;
            }
            std::cout << "no attack detected (max T=" << report.max_scaled_stat
                      << ", threshold=" << report.threshold << ")\n";
            return kExitOk;
        }

        if (qu->parsed()) {
            const auto table = eclipse::cached_bridge_quantile(
                qu_cache, qu_alpha, qu_delta, qu_grid, qu_paths, qu_seed);
            std::cout << table.quantile << "\n";
            return kExitOk;
        }

        if (roc->parsed()) {
            roc_flags.apply_preset();
            auto& sc = roc_flags.scenario;
            sc.attack = true;
            if (sc.tau == 0) sc.tau = static_cast<std::size_t>(0.6 * sc.n);
            if (roc_trials == 0) {
                std::cerr << "roc: --trials must be positive\n";
                return kExitUsage;
            }
            std::vector<double> snrs;
            for (const auto& s : roc_snrs) snrs.push_back(parse_snr(s));

            eclipse::DetectorConfig cfg;
            cfg.delta = roc_delta;
            const auto curves = eclipse::run_roc(sc, snrs, roc_trials, cfg);
            nlohmann::json summary = nlohmann::json::array();
            for (const auto& curve : curves) {
                const std::string path =
                    roc_out + "_snr" + snr_label(curve.snr) + ".csv";
                std::ofstream os(path);
                eclipse::write_roc_csv(os, curve);
                summary.push_back(eclipse::roc_to_json(curve));
                std::cout << "snr=" << snr_label(curve.snr)
                          << " auc=" << curve.auc << " -> " << path << "\n";
            }
            std::ofstream os(roc_out + "_summary.json");
            os << summary.dump(2) << "\n";
            return kExitOk;
        }

        if (cmp->parsed()) {
            cmp_flags.apply_preset();
            auto& sc = cmp_flags.scenario;
            if (sc.attack && sc.tau == 0) {
                std::cerr << "compare-stat: --attack requires --tau\n";
                return kExitUsage;
            }
            if (cmp_trials == 0) {
                std::cerr << "compare-stat: --trials must be positive\n";
                return kExitUsage;
            }
            eclipse::MeanMode raw_mode;
            if (cmp_mode == "euclidean") {
                raw_mode = eclipse::MeanMode::euclidean;
            } else if (cmp_mode == "sample-restricted") {
                raw_mode = eclipse::MeanMode::sample_restricted;
            } else {
                std::cerr << "compare-stat: unknown --mean-mode '" << cmp_mode
                          << "'\n";
                return kExitUsage;
            }
            const auto result = eclipse::compare_projected_vs_original(
                sc, cmp_trials, cmp_k, cmp_eps, cmp_delta, raw_mode);
            std::ofstream os(cmp_out);
            eclipse::write_comparison_csv(os, result);
            std::cout << "wrote " << cmp_out << ": trials=" << result.trials
                      << " frac_projected_ge=" << result.frac_projected_ge << "\n";
            return kExitOk;
        }
    } catch (const eclipse::DegenerateVariance& e) {
        std::cerr << "degenerate statistic: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const eclipse::DataFormatError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
