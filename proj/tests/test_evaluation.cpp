#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eclipse/evaluation.hpp"

using namespace eclipse;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

AttackScenario small_attack_scenario() {
    AttackScenario s;
    s.p = 25;
    s.q = 3;
    s.n = 150;
    s.rows_used = 4;
    s.attack = true;
    s.tau = 90;
    s.victims = {0};
    s.attackers = {23, 24};
    s.seed = 61;
    return s;
}

}  // namespace

TEST_CASE("calibration rejects zero trials") {
    AttackScenario s = small_attack_scenario();
    s.attack = false;
    DetectorConfig cfg;
    CHECK_THROWS_AS(run_calibration(s, 0, 0.05, cfg), InvalidParameters);
}

TEST_CASE("calibration at alpha=0.5 rejects about half the time") {
    AttackScenario s;
    s.p = 15;
    s.q = 2;
    // long sequence: the finite-sample bias of the mean-shift term decays
    // like dim/N, so a short sequence would inflate the rate
    s.n = 800;
    s.rows_used = 4;
    s.seed = 71;
    DetectorConfig cfg;
    cfg.quantile_paths = 4000;
    const auto res = run_calibration(s, 200, 0.5, cfg);
    CHECK(res.trials == 200);
    CHECK(res.rate == doctest::Approx(0.5).epsilon(0.4));
    CHECK(res.ci_low <= res.rate);
    CHECK(res.ci_high >= res.rate);
}

TEST_CASE("roc separates a strong attack cleanly at snr=inf") {
    const auto s = small_attack_scenario();
    DetectorConfig cfg;
    const auto curves = run_roc(s, {kInf}, 30, cfg);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].auc >= 0.9);

    // staircase: TPR non-decreasing as FPR grows along sorted points
    auto pts = curves[0].points;
    std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
        return a.fpr != b.fpr ? a.fpr < b.fpr : a.tpr < b.tpr;
    });
    for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i].tpr >= pts[i - 1].tpr);
        CHECK(pts[i].fpr >= pts[i - 1].fpr);
    }
}

TEST_CASE("no-signal roc has AUC near one half") {
    auto s = small_attack_scenario();
    // degenerate attack: no attackers, so H1 trials follow the honest law
    s.attackers.clear();
    s.victims.clear();
    DetectorConfig cfg;
    const auto curves = run_roc(s, {kInf}, 40, cfg);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].auc == doctest::Approx(0.5).epsilon(0.35));
}

TEST_CASE("roc input validation") {
    const auto s = small_attack_scenario();
    DetectorConfig cfg;
    CHECK_THROWS_AS(run_roc(s, {kInf}, 0, cfg), InvalidParameters);
    AttackScenario h0 = s;
    h0.attack = false;
    CHECK_THROWS_AS(run_roc(h0, {kInf}, 10, cfg), InvalidScenario);
}

TEST_CASE("onset rmse on a strong attack") {
    const auto s = small_attack_scenario();
    DetectorConfig cfg;
    cfg.quantile_paths = 4000;
    const auto summary = run_onset_rmse(s, 20, cfg);
    CHECK(summary.records.size() == 20);
    CHECK(summary.detection_accuracy >= 0.9);
    CHECK(summary.onset_rmse <= 15.0);
    CHECK(summary.onset_median_abs_err <= 10.0);
}

TEST_CASE("stronger attacks estimate the onset at least as well") {
    auto weak = small_attack_scenario();
    weak.attackers = {24};
    auto strong = small_attack_scenario();
    strong.attackers = {21, 22, 23, 24};
    DetectorConfig cfg;
    cfg.quantile_paths = 2000;
    const auto weak_summary = run_onset_rmse(weak, 30, cfg);
    const auto strong_summary = run_onset_rmse(strong, 30, cfg);
    CHECK(strong_summary.onset_rmse <= weak_summary.onset_rmse + 1.0);
}

TEST_CASE("onset rmse input validation") {
    const auto s = small_attack_scenario();
    DetectorConfig cfg;
    CHECK_THROWS_AS(run_onset_rmse(s, 0, cfg), InvalidParameters);
    AttackScenario h0 = s;
    h0.attack = false;
    CHECK_THROWS_AS(run_onset_rmse(h0, 5, cfg), InvalidScenario);
}

TEST_CASE("identity projection reproduces the raw curve exactly") {
    auto s = small_attack_scenario();
    s.attack = false;
    s.tau = 0;
    const auto cmp = compare_projected_vs_original(s, 5, 0, 0.5, 0.1,
                                                   MeanMode::euclidean, true);
    for (std::size_t i = 0; i < cmp.ns.size(); ++i) {
        CHECK(cmp.projected_avg[i] ==
              doctest::Approx(cmp.original_avg[i]).epsilon(1e-10));
    }
    CHECK(cmp.frac_projected_ge == doctest::Approx(1.0));
}

TEST_CASE("projected H1 curve peaks near the raw peak") {
    const auto s = small_attack_scenario();
    const auto cmp = compare_projected_vs_original(s, 10, 80, 0.8, 0.1,
                                                   MeanMode::euclidean);
    std::size_t arg_orig = 0;
    std::size_t arg_proj = 0;
    for (std::size_t i = 1; i < cmp.ns.size(); ++i) {
        if (cmp.original_avg[i] > cmp.original_avg[arg_orig]) arg_orig = i;
        if (cmp.projected_avg[i] > cmp.projected_avg[arg_proj]) arg_proj = i;
    }
    const double gap = std::abs(static_cast<double>(cmp.ns[arg_orig]) -
                                static_cast<double>(cmp.ns[arg_proj]));
    CHECK(gap <= 0.05 * static_cast<double>(s.n));
}
