#pragma once

#include <stdexcept>
#include <string>

namespace eclipse {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidScenario : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSnr : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidEpsilon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DistortionNotAchieved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySegment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when the pooled variance of squared distances is numerically zero,
// e.g. a constant sequence. A constant observed network is itself anomalous,
// so this surfaces as an error instead of a silent zero statistic.
struct DegenerateVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowEmpty : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DataFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eclipse
