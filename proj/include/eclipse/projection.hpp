#pragma once

#include <optional>

#include "eclipse/points.hpp"
#include "eclipse/rng.hpp"

namespace eclipse {

// A random linear map R^m -> R^k with i.i.d. Gaussian(0, 1/k) entries,
// verified against the two-sided (1 +/- epsilon) squared-distance bound on
// the dataset it was built for. The identity flag marks the exact isometry
// used as a test hook and for the raw-vs-projected comparisons.
struct JlMap {
    std::vector<double> matrix;  // k x m row-major, empty when identity
    std::size_t k = 0;
    std::size_t m = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    bool verified = false;
    bool identity = false;
    double max_distortion = 0.0;  // max |ratio - 1| over the checked pairs

    std::vector<double> apply(std::span<const double> x) const;
};

struct ProjectedSequence {
    PointSet vectors;
    JlMap map;
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t rows_used = 0;
    std::optional<GroundTruth> truth;
    std::uint64_t source_seed = 0;
};

// Smallest k satisfying k >= 24 / (3 eps^2 - 2 eps^3) * ln(n_points).
std::size_t min_jl_dimension(double epsilon, std::size_t n_points);

JlMap identity_map(std::size_t m);

// Samples a Gaussian map and verifies the pairwise distortion bound on the
// dataset (all pairs, or a sampled subset of at least 10^4 when the dataset
// is large), resampling up to max_retries times.
JlMap build_jl_map(std::size_t m, std::size_t k, double epsilon,
                   const PointSet& dataset, std::uint64_t seed,
                   int max_retries = 10);

PointSet project_points(const PointSet& pts, const JlMap& map);

ProjectedSequence project_sequence(const GraphSequence& seq, const JlMap& map);

}  // namespace eclipse
