#include "eclipse/detector.hpp"

#include <algorithm>
#include <cmath>

namespace eclipse {

BridgeQuantileTable simulate_bridge_quantile(double alpha, double delta,
                                             std::size_t grid_points,
                                             std::size_t n_paths,
                                             std::uint64_t seed) {
    if (alpha <= 0.0 || alpha >= 1.0 || delta <= 0.0 || delta >= 0.5 ||
        grid_points < 10 || n_paths < 1000) {
        throw InvalidParameters("simulate_bridge_quantile: bad parameters");
    }

    const double dt = 1.0 / static_cast<double>(grid_points);
    const double sqrt_dt = std::sqrt(dt);
    std::vector<double> maxima(n_paths, 0.0);
    std::vector<double> walk(grid_points, 0.0);  // W(i/G), i = 1..G

    for (std::size_t path = 0; path < n_paths; ++path) {
        Rng rng = make_rng(seed, path + 1);
        std::normal_distribution<double> gauss(0.0, 1.0);
        double w = 0.0;
        for (std::size_t i = 0; i < grid_points; ++i) {
            w += sqrt_dt * gauss(rng);
            walk[i] = w;
        }
        const double w1 = walk[grid_points - 1];
        double m = 0.0;
        for (std::size_t i = 1; i < grid_points; ++i) {
            const double t = static_cast<double>(i) * dt;
            if (t <= delta || t >= 1.0 - delta) continue;
            const double bridge = (walk[i - 1] - t * w1) / std::sqrt(t * (1.0 - t));
            m = std::max(m, bridge * bridge);
        }
        maxima[path] = m;
    }

    std::sort(maxima.begin(), maxima.end());
    const auto rank = static_cast<std::size_t>(
        std::ceil((1.0 - alpha) * static_cast<double>(n_paths)));
    BridgeQuantileTable table;
    table.alpha = alpha;
    table.delta = delta;
    table.grid_points = grid_points;
    table.n_paths = n_paths;
    table.seed = seed;
    table.quantile = maxima[std::min(n_paths - 1, rank == 0 ? 0 : rank - 1)];
    return table;
}

std::size_t estimate_onset(const StatisticCurve& curve) {
    return curve.argmax_n();
}

DetectionReport detect(const GraphSequence& seq, const DetectorConfig& config) {
    DetectionReport report;
    report.config = config;
    report.sequence_length = seq.size();
    report.sequence_seed = seq.seed;

    PointSet points = vectorize_sequence(seq);
    if (config.use_projection) {
        JlMap map = build_jl_map(points.dim, config.jl_dim, config.epsilon,
                                 points, config.jl_seed, config.jl_max_retries);
        points = project_points(points, map);
        report.jl_map = std::move(map);
    }

    report.curve = statistic_curve(points, config.delta, config.mean_mode);
    report.max_scaled_stat = report.curve.max_scaled();

    if (config.threshold_override) {
        report.threshold = *config.threshold_override;
    } else {
        const std::size_t grid =
            config.quantile_grid == 0 ? seq.size() : config.quantile_grid;
        report.threshold =
            simulate_bridge_quantile(config.alpha, config.delta, grid,
                                     config.quantile_paths, config.quantile_seed)
                .quantile;
    }

    report.detected = report.max_scaled_stat >= report.threshold;
    if (report.detected) {
        report.tau_hat = estimate_onset(report.curve);
    }
    return report;
}

}  // namespace eclipse
