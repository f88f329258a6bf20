#include "eclipse/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eclipse {

namespace {

constexpr double kDegenerateSigmaSq = 1e-12;

std::vector<double> euclidean_mean(const PointSet& pts, std::size_t first,
                                   std::size_t count) {
    std::vector<double> mean(pts.dim, 0.0);
    for (std::size_t i = first; i < first + count; ++i) {
        const auto x = pts.point(i);
        for (std::size_t k = 0; k < pts.dim; ++k) mean[k] += x[k];
    }
    for (auto& v : mean) v /= static_cast<double>(count);
    return mean;
}

// argmin over all observed points of the summed squared distance to the
// segment; ties broken by lowest candidate index.
std::size_t restricted_mean_index(const PointSet& pts, std::size_t first,
                                  std::size_t count) {
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < pts.count; ++w) {
        double cost = 0.0;
        for (std::size_t i = first; i < first + count; ++i) {
            cost += squared_distance(pts.point(i), pts.point(w));
        }
        if (cost < best_cost) {
            best_cost = cost;
            best = w;
        }
    }
    return best;
}

double mean_sq_distance_to(const PointSet& pts, std::size_t first,
                           std::size_t count, std::span<const double> center) {
    double acc = 0.0;
    for (std::size_t i = first; i < first + count; ++i) {
        acc += squared_distance(pts.point(i), center);
    }
    return acc / static_cast<double>(count);
}

double sq_norm(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

struct PooledStats {
    std::vector<double> mean;
    double variance = 0.0;
    double sigma_sq = 0.0;
};

PooledStats pooled_stats(const PointSet& pts, MeanMode mode) {
    PooledStats out;
    if (mode == MeanMode::euclidean) {
        out.mean = euclidean_mean(pts, 0, pts.count);
    } else {
        out.mean = frechet_mean(pts, mode);
    }
    double sum2 = 0.0;
    double sum4 = 0.0;
    for (std::size_t i = 0; i < pts.count; ++i) {
        const double d2 = squared_distance(pts.point(i), out.mean);
        sum2 += d2;
        sum4 += d2 * d2;
    }
    const double n = static_cast<double>(pts.count);
    out.variance = sum2 / n;
    out.sigma_sq = std::max(0.0, sum4 / n - out.variance * out.variance);
    return out;
}

}  // namespace

double StatisticCurve::max_scaled() const {
    double m = 0.0;
    for (double v : scaled) m = std::max(m, v);
    return m;
}

std::size_t StatisticCurve::argmax_n() const {
    if (ns.empty()) throw WindowEmpty("argmax_n: empty curve");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return ns[best];
}

double StatisticCurve::scaled_at_time(double t) const {
    if (ns.empty()) throw WindowEmpty("scaled_at_time: empty curve");
    const auto n = static_cast<std::size_t>(
        std::floor(t * static_cast<double>(n_total)));
    if (n < ns.front() || n > ns.back()) {
        throw WindowEmpty("scaled_at_time: t outside the admissible window");
    }
    return scaled[n - ns.front()];
}

std::vector<double> frechet_mean(const PointSet& pts, MeanMode mode) {
    return frechet_mean_range(pts, 0, pts.count, mode);
}

std::vector<double> frechet_mean_range(const PointSet& pts, std::size_t first,
                                       std::size_t count, MeanMode mode) {
    if (count == 0 || first + count > pts.count) {
        throw EmptySegment("frechet_mean: empty or out-of-range segment");
    }
    if (mode == MeanMode::euclidean) {
        return euclidean_mean(pts, first, count);
    }
    const std::size_t idx = restricted_mean_index(pts, first, count);
    const auto x = pts.point(idx);
    return {x.begin(), x.end()};
}

SegmentStats segment_stats(const PointSet& pts, std::size_t first,
                           std::size_t count, std::span<const double> other_mean,
                           MeanMode mode) {
    if (count == 0 || first + count > pts.count) {
        throw EmptySegment("segment_stats: empty or out-of-range segment");
    }
    if (other_mean.size() != pts.dim) {
        throw DimensionMismatch("segment_stats: other mean has wrong dimension");
    }
    SegmentStats out;
    out.mean = frechet_mean_range(pts, first, count, mode);
    out.variance = mean_sq_distance_to(pts, first, count, out.mean);
    out.contaminated_variance = mean_sq_distance_to(pts, first, count, other_mean);
    return out;
}

double pooled_sigma_sq(const PointSet& pts, MeanMode mode) {
    if (pts.count < 2) {
        throw EmptySegment("pooled_sigma_sq: need at least 2 points");
    }
    return pooled_stats(pts, mode).sigma_sq;
}

StatisticCurve statistic_curve(const PointSet& pts, double delta, MeanMode mode) {
    if (delta <= 0.0 || delta >= 0.5) {
        throw InvalidParameters("statistic_curve: delta must lie in (0, 0.5)");
    }
    const std::size_t n_total = pts.count;
    if (n_total < 4) {
        throw InvalidParameters("statistic_curve: need at least 4 points");
    }

    StatisticCurve curve;
    curve.n_total = n_total;
    curve.delta = delta;
    curve.mode = mode;
    const double nt = static_cast<double>(n_total);
    for (std::size_t n = 1; n < n_total; ++n) {
        const double t = static_cast<double>(n) / nt;
        if (t > delta && t < 1.0 - delta) curve.ns.push_back(n);
    }
    if (curve.ns.empty()) {
        throw WindowEmpty("statistic_curve: no admissible split point");
    }

    const PooledStats pooled = pooled_stats(pts, mode);
    curve.pooled_variance = pooled.variance;
    curve.sigma_sq = pooled.sigma_sq;
    if (curve.sigma_sq < kDegenerateSigmaSq) {
        throw DegenerateVariance("statistic_curve: pooled sigma^2 is numerically zero");
    }

    curve.values.reserve(curve.ns.size());
    curve.scaled.reserve(curve.ns.size());

    if (mode == MeanMode::euclidean) {
        // Running prefix sums give each split in O(dim). For euclidean
        // means, V_c = V + ||mean1 - mean2||^2 exactly.
        const std::size_t dim = pts.dim;
        std::vector<double> prefix(dim, 0.0);
        std::vector<double> total(dim, 0.0);
        std::vector<double> prefix_sq(n_total + 1, 0.0);
        for (std::size_t i = 0; i < n_total; ++i) {
            const auto x = pts.point(i);
            for (std::size_t k = 0; k < dim; ++k) total[k] += x[k];
            prefix_sq[i + 1] = prefix_sq[i] + sq_norm(x);
        }
        const double total_sq = prefix_sq[n_total];

        std::size_t consumed = 0;
        for (std::size_t n : curve.ns) {
            while (consumed < n) {
                const auto x = pts.point(consumed);
                for (std::size_t k = 0; k < dim; ++k) prefix[k] += x[k];
                ++consumed;
            }
            const double n1 = static_cast<double>(n);
            const double n2 = static_cast<double>(n_total - n);
            double mean1_sq = 0.0;
            double mean2_sq = 0.0;
            double gap_sq = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double m1 = prefix[k] / n1;
                const double m2 = (total[k] - prefix[k]) / n2;
                mean1_sq += m1 * m1;
                mean2_sq += m2 * m2;
                const double g = m1 - m2;
                gap_sq += g * g;
            }
            const double v1 = prefix_sq[n] / n1 - mean1_sq;
            const double v2 = (total_sq - prefix_sq[n]) / n2 - mean2_sq;
            const double var_gap = v1 - v2;
            const double mean_gap = 2.0 * gap_sq;  // (V1c - V1) + (V2c - V2)
            const double weight = n1 * n2 / (nt * nt * curve.sigma_sq);
            const double s = weight * (var_gap * var_gap + mean_gap * mean_gap);
            curve.values.push_back(s);
            curve.scaled.push_back(nt * s);
        }
        return curve;
    }

    // sample_restricted: precompute the squared-distance matrix, then turn
    // it into per-candidate prefix sums over the time index.
    std::vector<double> d2(n_total * n_total, 0.0);
    for (std::size_t i = 0; i < n_total; ++i) {
        for (std::size_t j = i + 1; j < n_total; ++j) {
            const double v = squared_distance(pts.point(i), pts.point(j));
            d2[i * n_total + j] = v;
            d2[j * n_total + i] = v;
        }
    }
    // prefix[i][w] = sum over r <= i of d2[r][w], accumulated in place.
    for (std::size_t i = 1; i < n_total; ++i) {
        double* row = d2.data() + i * n_total;
        const double* prev = d2.data() + (i - 1) * n_total;
        for (std::size_t w = 0; w < n_total; ++w) row[w] += prev[w];
    }
    const double* colsum = d2.data() + (n_total - 1) * n_total;

    for (std::size_t n : curve.ns) {
        const double* pre = d2.data() + (n - 1) * n_total;
        std::size_t mu1 = 0;
        std::size_t mu2 = 0;
        double best1 = std::numeric_limits<double>::infinity();
        double best2 = std::numeric_limits<double>::infinity();
        for (std::size_t w = 0; w < n_total; ++w) {
            if (pre[w] < best1) {
                best1 = pre[w];
                mu1 = w;
            }
            const double suf = colsum[w] - pre[w];
            if (suf < best2) {
                best2 = suf;
                mu2 = w;
            }
        }
        const double n1 = static_cast<double>(n);
        const double n2 = static_cast<double>(n_total - n);
        const double v1 = best1 / n1;
        const double v2 = best2 / n2;
        const double v1c = pre[mu2] / n1;
        const double v2c = (colsum[mu1] - pre[mu1]) / n2;
        const double var_gap = v1 - v2;
        const double mean_gap = (v1c - v1) + (v2c - v2);
        const double weight = n1 * n2 / (nt * nt * curve.sigma_sq);
        const double s = weight * (var_gap * var_gap + mean_gap * mean_gap);
        curve.values.push_back(s);
        curve.scaled.push_back(nt * s);
    }
    return curve;
}

}  // namespace eclipse
