#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "eclipse/errors.hpp"

namespace eclipse {

// One BCN snapshot stored as a dense 0/1 slab of rows x p entries.
// Entry (i, j) = 1 means vertex j has an outgoing edge to vertex i, so
// column j holds the neighbor choices of vertex j. rows may be smaller
// than p when only the top rows of the adjacency matrix are retained.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    AdjacencyMatrix(std::size_t rows, std::size_t p)
        : rows_(rows), p_(p), entries_(rows * p, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t p() const { return p_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const {
        return entries_[i * p_ + j];
    }
    void set(std::size_t i, std::size_t j, std::uint8_t v) {
        entries_[i * p_ + j] = v;
    }

    const std::vector<std::uint8_t>& entries() const { return entries_; }
    std::vector<std::uint8_t>& entries() { return entries_; }

    bool same_shape(const AdjacencyMatrix& other) const {
        return rows_ == other.rows_ && p_ == other.p_;
    }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t p_ = 0;
    std::vector<std::uint8_t> entries_;
};

struct GroundTruth {
    bool attack = false;
    std::size_t tau = 0;  // 1-based index of the first attacked snapshot
    std::vector<std::size_t> victims;
    std::vector<std::size_t> attackers;

    friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

// Ordered batch of snapshots sharing one (rows_used, p) shape, plus the
// generation metadata needed to reproduce it.
struct GraphSequence {
    std::vector<AdjacencyMatrix> snapshots;
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t rows_used = 0;
    std::optional<GroundTruth> truth;
    std::uint64_t seed = 0;
    double snr = std::numeric_limits<double>::infinity();

    std::size_t size() const { return snapshots.size(); }

    friend bool operator==(const GraphSequence&, const GraphSequence&) = default;
};

// Frobenius norm of the entry-wise difference.
double frobenius_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// Row-major flattening; an isometry from (matrices, Frobenius) to
// (vectors, Euclidean).
std::vector<double> vectorize(const AdjacencyMatrix& a);

}  // namespace eclipse
