#include "eclipse/adjacency.hpp"

#include <cmath>

namespace eclipse {

double frobenius_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch("frobenius_distance: shapes differ");
    }
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    // Entries are 0/1, so each differing position contributes exactly 1.
    std::size_t diff = 0;
    for (std::size_t k = 0; k < ea.size(); ++k) {
        diff += static_cast<std::size_t>(ea[k] != eb[k]);
    }
    return std::sqrt(static_cast<double>(diff));
}

std::vector<double> vectorize(const AdjacencyMatrix& a) {
    std::vector<double> out(a.entries().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = static_cast<double>(a.entries()[k]);
    }
    return out;
}

}  // namespace eclipse
