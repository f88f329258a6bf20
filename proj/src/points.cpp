#include "eclipse/points.hpp"

namespace eclipse {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("squared_distance: dimensions differ");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

PointSet vectorize_sequence(const GraphSequence& seq) {
    const std::size_t n = seq.size();
    const std::size_t dim = n == 0 ? 0 : seq.snapshots[0].entries().size();
    PointSet out(n, dim);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& entries = seq.snapshots[i].entries();
        if (entries.size() != dim) {
            throw DimensionMismatch("vectorize_sequence: inconsistent snapshot shapes");
        }
        auto dst = out.point(i);
        for (std::size_t k = 0; k < dim; ++k) {
            dst[k] = static_cast<double>(entries[k]);
        }
    }
    return out;
}

}  // namespace eclipse
