#pragma once

#include <stdexcept>
#include <string>

namespace lens {

/// Adaptive quadrature hit the subdivision depth limit before converging.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An intermediate value left the representable double range.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix inversion refused: smallest eigenvalue below the singularity cutoff.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Power detection found no interval above the threshold.
struct NoWindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The focusing window has no real edges (source is effectively far-field).
struct DegenerateWindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lens
