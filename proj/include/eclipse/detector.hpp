#pragma once

#include <optional>

#include "eclipse/frechet.hpp"
#include "eclipse/projection.hpp"
#include "eclipse/simulator.hpp"

namespace eclipse {

// Monte-Carlo quantile of max over the trimmed grid of the squared
// standardized Brownian bridge.
struct BridgeQuantileTable {
    double alpha = 0.0;
    double delta = 0.0;
    std::size_t grid_points = 0;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
    double quantile = 0.0;
};

// Paths of B(t) = (W(t) - t W(1)) / sqrt(t(1-t)) are sampled on a uniform
// grid t = i/grid_points and maximized over t strictly inside
// (delta, 1-delta); the table holds the empirical (1-alpha) quantile of
// the per-path max of B^2.
BridgeQuantileTable simulate_bridge_quantile(double alpha, double delta,
                                             std::size_t grid_points,
                                             std::size_t n_paths,
                                             std::uint64_t seed);

struct DetectorConfig {
    double alpha = 0.05;
    double delta = 0.1;
    MeanMode mean_mode = MeanMode::euclidean;

    bool use_projection = false;
    std::size_t jl_dim = 100;
    double epsilon = 0.7;
    int jl_max_retries = 10;
    std::uint64_t jl_seed = 1;

    std::size_t quantile_paths = 10000;
    std::size_t quantile_grid = 0;  // 0 -> match the sequence length
    std::uint64_t quantile_seed = 20240001;
    // Reuse an externally computed threshold (e.g. from the cache) instead
    // of simulating the bridge quantile.
    std::optional<double> threshold_override;
};

struct DetectionReport {
    bool detected = false;
    std::optional<std::size_t> tau_hat;  // split index n*, present iff detected
    double max_scaled_stat = 0.0;
    double threshold = 0.0;
    StatisticCurve curve;
    DetectorConfig config;
    std::size_t sequence_length = 0;
    std::uint64_t sequence_seed = 0;
    std::optional<JlMap> jl_map;  // populated when projection was applied
};

// Full pipeline: vectorize, optionally project, compute the statistic
// curve, compare max T against the bridge quantile, estimate the onset.
DetectionReport detect(const GraphSequence& seq, const DetectorConfig& config);

// Admissible n maximizing S_{n,N}; ties broken by smallest n.
std::size_t estimate_onset(const StatisticCurve& curve);

}  // namespace eclipse
