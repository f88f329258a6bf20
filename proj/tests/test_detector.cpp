#include "doctest.h"

#include <cmath>

#include "eclipse/detector.hpp"

using namespace eclipse;

namespace {

PointSet gaussian_points(std::size_t count, std::size_t dim, std::uint64_t seed,
                         double shift_from = 0.0, std::size_t shift_at = 0) {
    PointSet pts(count, dim);
    Rng rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            pts.point(i)[k] = gauss(rng) + (shift_at > 0 && i + 1 >= shift_at
                                                ? shift_from
                                                : 0.0);
        }
    }
    return pts;
}

}  // namespace

TEST_CASE("bridge marginals have mean ~0 and variance ~1") {
    // re-derive per-grid-point samples of the standardized bridge
    const std::size_t grid = 100;
    const std::size_t paths = 10000;
    const double dt = 1.0 / grid;
    double sum = 0.0;
    double sum_sq = 0.0;
    const std::size_t probe = 37;  // t = 0.37
    for (std::size_t path = 0; path < paths; ++path) {
        Rng rng = make_rng(4242, path + 1);
        std::normal_distribution<double> gauss(0.0, 1.0);
        double w = 0.0;
        double w_probe = 0.0;
        for (std::size_t i = 1; i <= grid; ++i) {
            w += std::sqrt(dt) * gauss(rng);
            if (i == probe) w_probe = w;
        }
        const double t = probe * dt;
        const double b = (w_probe - t * w) / std::sqrt(t * (1.0 - t));
        sum += b;
        sum_sq += b * b;
    }
    const double mean = sum / paths;
    const double var = sum_sq / paths - mean * mean;
    CHECK(mean == doctest::Approx(0.0).epsilon(1.0));
    CHECK(std::abs(mean) < 0.03);
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("quantile is monotone decreasing in alpha") {
    const auto q01 = simulate_bridge_quantile(0.01, 0.1, 200, 4000, 7).quantile;
    const auto q05 = simulate_bridge_quantile(0.05, 0.1, 200, 4000, 7).quantile;
    const auto q10 = simulate_bridge_quantile(0.10, 0.1, 200, 4000, 7).quantile;
    const auto q95 = simulate_bridge_quantile(0.95, 0.1, 200, 4000, 7).quantile;
    CHECK(q01 > q05);
    CHECK(q05 > q10);
    CHECK(q10 > q95);
    CHECK(q95 > 0.0);
}

TEST_CASE("default-config quantile is near 9.05") {
    const auto table = simulate_bridge_quantile(0.05, 0.1, 1000, 10000, 11);
    CHECK(table.quantile > 8.0);
    CHECK(table.quantile < 10.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(simulate_bridge_quantile(0.0, 0.1, 100, 2000, 1),
                    InvalidParameters);
    CHECK_THROWS_AS(simulate_bridge_quantile(0.05, 0.6, 100, 2000, 1),
                    InvalidParameters);
    CHECK_THROWS_AS(simulate_bridge_quantile(0.05, 0.1, 5, 2000, 1),
                    InvalidParameters);
    CHECK_THROWS_AS(simulate_bridge_quantile(0.05, 0.1, 100, 10, 1),
                    InvalidParameters);
}

TEST_CASE("estimate_onset picks the smallest argmax") {
    StatisticCurve curve;
    curve.n_total = 10;
    curve.delta = 0.1;
    curve.ns = {2, 3, 4, 5, 6, 7};
    curve.values = {0.1, 0.5, 0.2, 0.5, 0.3, 0.0};
    curve.scaled = curve.values;
    CHECK(estimate_onset(curve) == 3);

    curve.values.assign(6, 1.0);
    CHECK(estimate_onset(curve) == 2);

    StatisticCurve empty;
    CHECK_THROWS_AS(estimate_onset(empty), WindowEmpty);
}

TEST_CASE("null rejection rate stays near alpha on gaussian noise") {
    const std::size_t n = 200;
    const double threshold =
        simulate_bridge_quantile(0.05, 0.1, n, 10000, 3).quantile;
    std::size_t rejections = 0;
    const std::size_t trials = 500;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto pts = gaussian_points(n, 5, 1000 + t);
        const auto curve = statistic_curve(pts, 0.1, MeanMode::euclidean);
        if (curve.max_scaled() >= threshold) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / trials;
    CHECK(rate >= 0.02);
    CHECK(rate <= 0.10);
}

TEST_CASE("onset estimate concentrates near a mean shift") {
    const std::size_t n = 200;
    const std::size_t tau = 120;
    std::size_t close = 0;
    for (std::size_t t = 0; t < 100; ++t) {
        const auto pts = gaussian_points(n, 5, 9000 + t, 1.5, tau);
        const auto curve = statistic_curve(pts, 0.1, MeanMode::euclidean);
        const auto hat = estimate_onset(curve);
        if (hat >= tau - 10 && hat <= tau + 10) ++close;
    }
    CHECK(close >= 90);
}

TEST_CASE("detect is deterministic and decision-consistent") {
    AttackScenario s;
    s.p = 30;
    s.q = 3;
    s.n = 120;
    s.rows_used = 4;
    s.attack = true;
    s.tau = 70;
    s.victims = {0};
    s.attackers = {28, 29};
    s.seed = 5;
    const auto seq = generate_sequence(s);

    DetectorConfig cfg;
    cfg.quantile_paths = 2000;
    const auto a = detect(seq, cfg);
    const auto b = detect(seq, cfg);
    CHECK(a.detected == b.detected);
    CHECK(a.max_scaled_stat == b.max_scaled_stat);
    CHECK(a.threshold == b.threshold);
    CHECK(a.curve.values == b.curve.values);
    CHECK(a.detected == (a.max_scaled_stat >= a.threshold));
    if (a.detected) {
        REQUIRE(a.tau_hat.has_value());
        CHECK(*a.tau_hat == estimate_onset(a.curve));
    } else {
        CHECK(!a.tau_hat.has_value());
    }
}

TEST_CASE("detect finds a strong attack and reports the onset") {
    AttackScenario s;
    s.p = 40;
    s.q = 4;
    s.n = 300;
    s.rows_used = 4;
    s.attack = true;
    s.tau = 180;
    s.victims = {0};
    s.attackers = {37, 38, 39};
    s.seed = 21;
    const auto seq = generate_sequence(s);

    DetectorConfig cfg;
    cfg.quantile_paths = 4000;
    const auto report = detect(seq, cfg);
    CHECK(report.detected);
    REQUIRE(report.tau_hat.has_value());
    CHECK(std::abs(static_cast<double>(*report.tau_hat) - 180.0) <= 15.0);
}

TEST_CASE("detect with projection records the verified map") {
    AttackScenario s;
    s.p = 50;
    s.q = 5;
    s.n = 150;
    s.rows_used = 4;
    s.seed = 31;
    const auto seq = generate_sequence(s);

    DetectorConfig cfg;
    cfg.use_projection = true;
    cfg.jl_dim = 60;
    cfg.epsilon = 0.7;
    cfg.quantile_paths = 2000;
    const auto report = detect(seq, cfg);
    REQUIRE(report.jl_map.has_value());
    CHECK(report.jl_map->verified);
    CHECK(report.jl_map->k == 60);
    CHECK(report.jl_map->max_distortion < 0.7);
}

TEST_CASE("threshold override bypasses the bridge simulation") {
    AttackScenario s;
    s.p = 20;
    s.q = 2;
    s.n = 60;
    s.seed = 41;
    const auto seq = generate_sequence(s);
    DetectorConfig cfg;
    cfg.threshold_override = 1e9;
    const auto report = detect(seq, cfg);
    CHECK(report.threshold == 1e9);
    CHECK(!report.detected);
}
