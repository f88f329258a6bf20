#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eclipse/adjacency.hpp"

namespace eclipse {

// Flat row-major storage for a sequence of equal-length real vectors.
struct PointSet {
    std::vector<double> data;
    std::size_t count = 0;
    std::size_t dim = 0;

    PointSet() = default;
    PointSet(std::size_t count, std::size_t dim)
        : data(count * dim, 0.0), count(count), dim(dim) {}

    std::span<const double> point(std::size_t i) const {
        return {data.data() + i * dim, dim};
    }
    std::span<double> point(std::size_t i) {
        return {data.data() + i * dim, dim};
    }
};

double squared_distance(std::span<const double> a, std::span<const double> b);

// Vectorizes every snapshot; point i is the row-major flattening of
// snapshot i, so Euclidean distances equal Frobenius distances.
PointSet vectorize_sequence(const GraphSequence& seq);

}  // namespace eclipse
