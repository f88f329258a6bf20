#include "eclipse/projection.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace eclipse {

namespace {

constexpr std::size_t kPairBudget = 10000;

// Enumerates the pairs to verify: all of them when feasible, otherwise a
// uniform sample of kPairBudget distinct-index pairs.
std::vector<std::pair<std::size_t, std::size_t>> verification_pairs(
    std::size_t count, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t all = count * (count - 1) / 2;
    if (all <= kPairBudget) {
        pairs.reserve(all);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        return pairs;
    }
    pairs.reserve(kPairBudget);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    while (pairs.size() < kPairBudget) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    return pairs;
}

// Checks (1-eps) d2 <= d2' <= (1+eps) d2 on the given pairs; reports the
// worst relative distortion seen.
bool check_distortion(const PointSet& original, const PointSet& projected,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      double epsilon, double& max_distortion) {
    max_distortion = 0.0;
    bool ok = true;
    for (const auto& [i, j] : pairs) {
        const double d2 = squared_distance(original.point(i), original.point(j));
        const double d2p = squared_distance(projected.point(i), projected.point(j));
        if (d2 == 0.0) {
            // f is linear, so coincident points stay coincident.
            continue;
        }
        const double ratio = d2p / d2;
        max_distortion = std::max(max_distortion, std::abs(ratio - 1.0));
        if (ratio < 1.0 - epsilon || ratio > 1.0 + epsilon) ok = false;
    }
    return ok;
}

}  // namespace

std::vector<double> JlMap::apply(std::span<const double> x) const {
    if (x.size() != m) {
        throw DimensionMismatch("JlMap::apply: input dimension differs from m");
    }
    if (identity) {
        return {x.begin(), x.end()};
    }
    std::vector<double> out(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        const double* row = matrix.data() + r * m;
        double acc = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            acc += row[c] * x[c];
        }
        out[r] = acc;
    }
    return out;
}

std::size_t min_jl_dimension(double epsilon, std::size_t n_points) {
    if (epsilon <= 0.0 || epsilon >= 1.0) {
        throw InvalidEpsilon("min_jl_dimension: epsilon must lie in (0,1)");
    }
    if (n_points < 2) {
        throw InvalidParameters("min_jl_dimension: need at least 2 points");
    }
    const double denom = 3.0 * epsilon * epsilon - 2.0 * epsilon * epsilon * epsilon;
    const double bound = 24.0 / denom * std::log(static_cast<double>(n_points));
    return static_cast<std::size_t>(std::ceil(bound));
}

JlMap identity_map(std::size_t m) {
    JlMap map;
    map.k = m;
    map.m = m;
    map.identity = true;
    map.verified = true;
    return map;
}

JlMap build_jl_map(std::size_t m, std::size_t k, double epsilon,
                   const PointSet& dataset, std::uint64_t seed,
                   int max_retries) {
    if (epsilon <= 0.0 || epsilon >= 1.0) {
        throw InvalidEpsilon("build_jl_map: epsilon must lie in (0,1)");
    }
    if (dataset.count == 0 || dataset.dim != m) {
        throw DimensionMismatch("build_jl_map: dataset does not match m");
    }

    Rng pair_rng = make_rng(seed, 0xbeef);
    const auto pairs = verification_pairs(dataset.count, pair_rng);

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        JlMap map;
        map.k = k;
        map.m = m;
        map.epsilon = epsilon;
        map.seed = seed;
        map.matrix.resize(k * m);
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt) + 1);
        std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(static_cast<double>(k)));
        for (auto& e : map.matrix) e = gauss(rng);

        const PointSet projected = project_points(dataset, map);
        if (check_distortion(dataset, projected, pairs, epsilon, map.max_distortion)) {
            map.verified = true;
            return map;
        }
    }
    throw DistortionNotAchieved("build_jl_map: distortion bound not met within retries");
}

PointSet project_points(const PointSet& pts, const JlMap& map) {
    if (pts.dim != map.m) {
        throw DimensionMismatch("project_points: point dimension differs from map.m");
    }
    PointSet out(pts.count, map.k);
    for (std::size_t i = 0; i < pts.count; ++i) {
        const auto projected = map.apply(pts.point(i));
        auto dst = out.point(i);
        std::copy(projected.begin(), projected.end(), dst.begin());
    }
    return out;
}

ProjectedSequence project_sequence(const GraphSequence& seq, const JlMap& map) {
    const PointSet raw = vectorize_sequence(seq);
    ProjectedSequence out;
    out.vectors = project_points(raw, map);
    out.map = map;
    out.p = seq.p;
    out.q = seq.q;
    out.rows_used = seq.rows_used;
    out.truth = seq.truth;
    out.source_seed = seq.seed;
    return out;
}

}  // namespace eclipse
