#pragma once

#include "eclipse/errors.hpp"
#include "eclipse/points.hpp"

namespace eclipse {

// How the Frechet mean is minimized. euclidean takes the entry-wise
// average, the exact minimizer of the summed squared Euclidean distance
// over the ambient space. sample_restricted searches only the observed
// points (ties broken by lowest index), staying inside the object space.
enum class MeanMode { euclidean, sample_restricted };

struct SegmentStats {
    std::vector<double> mean;
    double variance = 0.0;               // mean squared distance to own mean
    double contaminated_variance = 0.0;  // mean squared distance to the other mean
};

// Per-split values of the change statistic over the admissible window.
// values[i] is S_{n,N} for n = ns[i]; scaled[i] = N * values[i].
struct StatisticCurve {
    std::vector<std::size_t> ns;
    std::vector<double> values;
    std::vector<double> scaled;
    std::size_t n_total = 0;
    double delta = 0.0;
    double sigma_sq = 0.0;
    double pooled_variance = 0.0;
    MeanMode mode = MeanMode::euclidean;

    double max_scaled() const;
    // Smallest admissible n attaining the maximum of S_{n,N}.
    std::size_t argmax_n() const;
    // Step interpolation: T_N(t) = N * S_{n,N} for N*t in [n, n+1).
    double scaled_at_time(double t) const;
};

std::vector<double> frechet_mean(const PointSet& pts, MeanMode mode);

// Range variant over points [first, first+count). In sample_restricted
// mode candidates are all points of pts, not just the segment.
std::vector<double> frechet_mean_range(const PointSet& pts, std::size_t first,
                                       std::size_t count, MeanMode mode);

SegmentStats segment_stats(const PointSet& pts, std::size_t first,
                           std::size_t count, std::span<const double> other_mean,
                           MeanMode mode);

// (1/N) sum d^4(x_i, pooled mean) - pooled_variance^2, clamped at zero.
double pooled_sigma_sq(const PointSet& pts, MeanMode mode);

StatisticCurve statistic_curve(const PointSet& pts, double delta,
                               MeanMode mode = MeanMode::euclidean);

}  // namespace eclipse
