#include "eclipse/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eclipse {

namespace {

AttackScenario with_trial_seed(const AttackScenario& base, std::uint64_t stream) {
    AttackScenario s = base;
    s.seed = derive_seed(base.seed, stream);
    return s;
}

// max scaled statistic of one generated (optionally noisy, optionally
// projected) trial sequence.
double trial_score(const AttackScenario& scenario, double snr,
                   const DetectorConfig& config) {
    GraphSequence seq = generate_sequence(scenario);
    if (!std::isinf(snr)) {
        Rng noise_rng = make_rng(scenario.seed, 0x6e6f6973);
        seq = apply_observation_noise(seq, snr, noise_rng);
    }
    PointSet points = vectorize_sequence(seq);
    if (config.use_projection) {
        const JlMap map =
            build_jl_map(points.dim, config.jl_dim, config.epsilon, points,
                         derive_seed(scenario.seed, 0x6a6c), config.jl_max_retries);
        points = project_points(points, map);
    }
    return statistic_curve(points, config.delta, config.mean_mode).max_scaled();
}

double trapezoid_auc(std::vector<RocPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
        return a.fpr != b.fpr ? a.fpr < b.fpr : a.tpr < b.tpr;
    });
    double auc = 0.0;
    double px = 0.0;
    double py = 0.0;
    for (const auto& pt : pts) {
        auc += (pt.fpr - px) * (pt.tpr + py) / 2.0;
        px = pt.fpr;
        py = pt.tpr;
    }
    auc += (1.0 - px) * (1.0 + py) / 2.0;
    return auc;
}

}  // namespace

CalibrationResult run_calibration(const AttackScenario& h0_scenario,
                                  std::size_t trials, double alpha,
                                  const DetectorConfig& config) {
    if (trials == 0) {
        throw InvalidParameters("run_calibration: need at least one trial");
    }
    AttackScenario h0 = h0_scenario;
    h0.attack = false;
    h0.tau = 0;

    DetectorConfig cfg = config;
    cfg.alpha = alpha;
    if (!cfg.threshold_override) {
        const std::size_t grid = cfg.quantile_grid == 0 ? h0.n : cfg.quantile_grid;
        cfg.threshold_override =
            simulate_bridge_quantile(alpha, cfg.delta, grid, cfg.quantile_paths,
                                     cfg.quantile_seed)
                .quantile;
    }

    std::size_t rejections = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const AttackScenario trial = with_trial_seed(h0, i + 1);
        const double score =
            trial_score(trial, std::numeric_limits<double>::infinity(), cfg);
        if (score >= *cfg.threshold_override) ++rejections;
    }

    CalibrationResult out;
    out.trials = trials;
    out.rejections = rejections;
    out.rate = static_cast<double>(rejections) / static_cast<double>(trials);
    const double se = std::sqrt(out.rate * (1.0 - out.rate) /
                                static_cast<double>(trials));
    out.ci_low = std::max(0.0, out.rate - 2.576 * se);
    out.ci_high = std::min(1.0, out.rate + 2.576 * se);
    out.threshold = *cfg.threshold_override;
    return out;
}

std::vector<RocCurve> run_roc(const AttackScenario& h1_scenario,
                              const std::vector<double>& snr_list,
                              std::size_t trials_per_class,
                              const DetectorConfig& config) {
    if (trials_per_class == 0) {
        throw InvalidParameters("run_roc: need at least one trial per class");
    }
    if (!h1_scenario.attack) {
        throw InvalidScenario("run_roc: scenario must describe the attack class");
    }
    AttackScenario h0 = h1_scenario;
    h0.attack = false;
    h0.tau = 0;

    std::vector<RocCurve> curves;
    curves.reserve(snr_list.size());
    for (std::size_t s = 0; s < snr_list.size(); ++s) {
        const double snr = snr_list[s];
        std::vector<double> h0_scores(trials_per_class);
        std::vector<double> h1_scores(trials_per_class);
        for (std::size_t i = 0; i < trials_per_class; ++i) {
            const std::uint64_t stream = (s + 1) * 1000000 + i;
            h0_scores[i] = trial_score(with_trial_seed(h0, 2 * stream), snr, config);
            h1_scores[i] =
                trial_score(with_trial_seed(h1_scenario, 2 * stream + 1), snr, config);
        }

        std::vector<double> thresholds;
        thresholds.reserve(2 * trials_per_class);
        thresholds.insert(thresholds.end(), h0_scores.begin(), h0_scores.end());
        thresholds.insert(thresholds.end(), h1_scores.begin(), h1_scores.end());
        std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                         thresholds.end());

        RocCurve curve;
        curve.snr = snr;
        curve.trials_per_class = trials_per_class;
        for (double th : thresholds) {
            RocPoint pt;
            pt.threshold = th;
            pt.fpr = static_cast<double>(std::count_if(
                         h0_scores.begin(), h0_scores.end(),
                         [&](double v) { return v >= th; })) /
                     static_cast<double>(trials_per_class);
            pt.tpr = static_cast<double>(std::count_if(
                         h1_scores.begin(), h1_scores.end(),
                         [&](double v) { return v >= th; })) /
                     static_cast<double>(trials_per_class);
            curve.points.push_back(pt);
        }
        curve.auc = trapezoid_auc(curve.points);
        curves.push_back(std::move(curve));
    }
    return curves;
}

ExperimentSummary run_onset_rmse(const AttackScenario& h1_scenario,
                                 std::size_t trials,
                                 const DetectorConfig& config) {
    if (trials == 0) {
        throw InvalidParameters("run_onset_rmse: need at least one trial");
    }
    if (!h1_scenario.attack) {
        throw InvalidScenario("run_onset_rmse: scenario must have attack = true");
    }

    DetectorConfig cfg = config;
    if (!cfg.threshold_override) {
        const std::size_t grid =
            cfg.quantile_grid == 0 ? h1_scenario.n : cfg.quantile_grid;
        cfg.threshold_override =
            simulate_bridge_quantile(cfg.alpha, cfg.delta, grid,
                                     cfg.quantile_paths, cfg.quantile_seed)
                .quantile;
    }

    ExperimentSummary out;
    std::vector<double> abs_errs;
    double sq_err = 0.0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const AttackScenario trial = with_trial_seed(h1_scenario, 0x52000000 + i);
        const GraphSequence seq = generate_sequence(trial);
        const DetectionReport report = detect(seq, cfg);

        TrialRecord rec;
        rec.seed = trial.seed;
        rec.truth_attack = true;
        rec.detected = report.detected;
        rec.max_scaled_stat = report.max_scaled_stat;
        rec.tau_hat = estimate_onset(report.curve);
        out.records.push_back(rec);

        if (report.detected) ++correct;
        const double err = static_cast<double>(rec.tau_hat) -
                           static_cast<double>(trial.tau);
        sq_err += err * err;
        abs_errs.push_back(std::abs(err));
    }

    out.detection_accuracy =
        static_cast<double>(correct) / static_cast<double>(trials);
    out.onset_rmse = std::sqrt(sq_err / static_cast<double>(trials));
    std::sort(abs_errs.begin(), abs_errs.end());
    const std::size_t mid = trials / 2;
    out.onset_median_abs_err =
        trials % 2 == 1 ? abs_errs[mid] : (abs_errs[mid - 1] + abs_errs[mid]) / 2.0;
    return out;
}

CurveComparison compare_projected_vs_original(const AttackScenario& scenario,
                                              std::size_t trials, std::size_t k,
                                              double epsilon, double delta,
                                              MeanMode mode,
                                              bool identity_projection) {
    if (trials == 0) {
        throw InvalidParameters("compare_projected_vs_original: need trials >= 1");
    }

    CurveComparison out;
    out.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const AttackScenario t = with_trial_seed(scenario, 0x43000000 + trial);
        const GraphSequence seq = generate_sequence(t);
        const PointSet raw = vectorize_sequence(seq);

        const JlMap map =
            identity_projection
                ? identity_map(raw.dim)
                : build_jl_map(raw.dim, k, epsilon, raw,
                               derive_seed(t.seed, 0x6a6c), 10);
        const PointSet projected = project_points(raw, map);

        const StatisticCurve orig = statistic_curve(raw, delta, mode);
        const StatisticCurve proj =
            statistic_curve(projected, delta, MeanMode::euclidean);

        if (out.ns.empty()) {
            out.ns = orig.ns;
            out.t.resize(orig.ns.size());
            for (std::size_t i = 0; i < orig.ns.size(); ++i) {
                out.t[i] = static_cast<double>(orig.ns[i]) /
                           static_cast<double>(orig.n_total);
            }
            out.original_avg.assign(orig.ns.size(), 0.0);
            out.projected_avg.assign(orig.ns.size(), 0.0);
        }
        for (std::size_t i = 0; i < orig.scaled.size(); ++i) {
            out.original_avg[i] += orig.scaled[i];
            out.projected_avg[i] += proj.scaled[i];
        }
    }

    std::size_t dominated = 0;
    for (std::size_t i = 0; i < out.original_avg.size(); ++i) {
        out.original_avg[i] /= static_cast<double>(trials);
        out.projected_avg[i] /= static_cast<double>(trials);
        if (out.projected_avg[i] >= out.original_avg[i]) ++dominated;
    }
    out.frac_projected_ge = static_cast<double>(dominated) /
                            static_cast<double>(out.original_avg.size());
    return out;
}

}  // namespace eclipse
