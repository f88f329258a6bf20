#pragma once

// Definition-literal re-evaluation of the estimator battery and the change
// statistic, used as an independent oracle against the optimized library
// path. Everything here is written from the formulas with plain loops and
// deliberately shares no code with src/frechet.cpp.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "eclipse/points.hpp"

namespace oracle {

inline double d2(const eclipse::PointSet& pts, std::size_t i,
                 const std::vector<double>& center) {
    double acc = 0.0;
    const auto x = pts.point(i);
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - center[k];
        acc += d * d;
    }
    return acc;
}

// Euclidean mean of points [first, last).
inline std::vector<double> euclid_mean(const eclipse::PointSet& pts,
                                       std::size_t first, std::size_t last) {
    std::vector<double> m(pts.dim, 0.0);
    for (std::size_t i = first; i < last; ++i) {
        const auto x = pts.point(i);
        for (std::size_t k = 0; k < pts.dim; ++k) m[k] += x[k];
    }
    for (auto& v : m) v /= static_cast<double>(last - first);
    return m;
}

// Exhaustive argmin over all observed points of the summed squared
// distance to [first, last); ties broken by lowest candidate index.
inline std::vector<double> restricted_mean(const eclipse::PointSet& pts,
                                           std::size_t first, std::size_t last) {
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < pts.count; ++w) {
        const auto cand = pts.point(w);
        std::vector<double> c(cand.begin(), cand.end());
        double cost = 0.0;
        for (std::size_t i = first; i < last; ++i) cost += d2(pts, i, c);
        if (cost < best_cost) {
            best_cost = cost;
            best = w;
        }
    }
    const auto x = pts.point(best);
    return {x.begin(), x.end()};
}

inline std::vector<double> mean(const eclipse::PointSet& pts, std::size_t first,
                                std::size_t last, bool euclidean) {
    return euclidean ? euclid_mean(pts, first, last)
                     : restricted_mean(pts, first, last);
}

inline double mean_d2(const eclipse::PointSet& pts, std::size_t first,
                      std::size_t last, const std::vector<double>& center) {
    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) acc += d2(pts, i, center);
    return acc / static_cast<double>(last - first);
}

inline double sigma_sq(const eclipse::PointSet& pts, bool euclidean) {
    const auto mu = mean(pts, 0, pts.count, euclidean);
    const double v = mean_d2(pts, 0, pts.count, mu);
    double sum4 = 0.0;
    for (std::size_t i = 0; i < pts.count; ++i) {
        const double dd = d2(pts, i, mu);
        sum4 += dd * dd;
    }
    return sum4 / static_cast<double>(pts.count) - v * v;
}

// S_{n,N} for one split, recomputed from scratch.
inline double statistic_at(const eclipse::PointSet& pts, std::size_t n,
                           bool euclidean) {
    const std::size_t N = pts.count;
    const auto mu1 = mean(pts, 0, n, euclidean);
    const auto mu2 = mean(pts, n, N, euclidean);
    const double v1 = mean_d2(pts, 0, n, mu1);
    const double v2 = mean_d2(pts, n, N, mu2);
    const double v1c = mean_d2(pts, 0, n, mu2);
    const double v2c = mean_d2(pts, n, N, mu1);
    const double ss = sigma_sq(pts, euclidean);
    const double nn = static_cast<double>(n);
    const double nd = static_cast<double>(N);
    const double weight = nn * (nd - nn) / (nd * nd * ss);
    const double a = v1 - v2;
    const double b = (v1c - v1) + (v2c - v2);
    return weight * (a * a + b * b);
}

struct Curve {
    std::vector<std::size_t> ns;
    std::vector<double> values;
    std::vector<double> scaled;
};

inline Curve curve(const eclipse::PointSet& pts, double delta, bool euclidean) {
    Curve out;
    const double nd = static_cast<double>(pts.count);
    for (std::size_t n = 1; n < pts.count; ++n) {
        const double t = static_cast<double>(n) / nd;
        if (t <= delta || t >= 1.0 - delta) continue;
        out.ns.push_back(n);
        out.values.push_back(statistic_at(pts, n, euclidean));
        out.scaled.push_back(nd * out.values.back());
    }
    return out;
}

}  // namespace oracle
