#pragma once

#include "eclipse/detector.hpp"

namespace eclipse {

struct CalibrationResult {
    double rate = 0.0;     // empirical false-alarm fraction
    double ci_low = 0.0;   // 99% binomial band (normal approximation)
    double ci_high = 0.0;
    double threshold = 0.0;
    std::size_t trials = 0;
    std::size_t rejections = 0;
};

// Generates `trials` independent H0 sequences (per-trial seeds derived
// from scenario.seed) and reports the rejection fraction at level alpha.
CalibrationResult run_calibration(const AttackScenario& h0_scenario,
                                  std::size_t trials, double alpha,
                                  const DetectorConfig& config);

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    double threshold = 0.0;
};

struct RocCurve {
    double snr = 0.0;
    std::vector<RocPoint> points;  // sorted by descending threshold
    double auc = 0.0;
    std::size_t trials_per_class = 0;
};

// For each SNR: balanced H0/H1 trials, per-trial score = max of the scaled
// statistic, thresholds swept over the pooled score range, AUC by the
// trapezoid rule.
std::vector<RocCurve> run_roc(const AttackScenario& h1_scenario,
                              const std::vector<double>& snr_list,
                              std::size_t trials_per_class,
                              const DetectorConfig& config);

struct TrialRecord {
    std::uint64_t seed = 0;
    bool truth_attack = false;
    bool detected = false;
    double max_scaled_stat = 0.0;
    std::size_t tau_hat = 0;  // curve argmax, recorded for every trial
};

struct ExperimentSummary {
    double detection_accuracy = 0.0;
    double onset_rmse = 0.0;
    double onset_median_abs_err = 0.0;
    std::vector<TrialRecord> records;
};

// RMSE and median absolute error of the onset estimate over H1 trials.
ExperimentSummary run_onset_rmse(const AttackScenario& h1_scenario,
                                 std::size_t trials,
                                 const DetectorConfig& config);

struct CurveComparison {
    std::vector<std::size_t> ns;
    std::vector<double> t;
    std::vector<double> original_avg;   // trial-averaged scaled statistic
    std::vector<double> projected_avg;
    double frac_projected_ge = 0.0;     // grid fraction where projected >= original
    std::size_t trials = 0;
};

// Paired raw-vs-projected statistic curves over independent trials of the
// given scenario. `mode` selects the mean estimator for the raw arm; the
// projected arm always uses the euclidean mean, since projected vectors carry
// no graph structure and the ambient minimizer is exact for them.
// identity_projection replaces the JL map with the exact isometry (test hook).
CurveComparison compare_projected_vs_original(const AttackScenario& scenario,
                                              std::size_t trials, std::size_t k,
                                              double epsilon, double delta,
                                              MeanMode mode,
                                              bool identity_projection = false);

}  // namespace eclipse
