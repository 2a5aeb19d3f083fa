#pragma once

#include <stdexcept>
#include <string>

namespace cvat {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape-incompatible tensor operation; message names the op and the shapes.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NaN/Inf produced by a tensor op or loss; training treats this as divergence.
struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the replay buffer cannot serve a request (e.g. before warm-up).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cvat
