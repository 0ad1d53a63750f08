#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace lens {

/// Counter-based generator (Philox 4x32-10). Every draw is a pure function of
/// (key, counter), so Monte Carlo work can be sharded across workers without
/// shared state and still reproduce bit-identically.
struct Philox {
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

  /// Uniform double in (0, 1] from counter word pair.
  static double uniform(std::uint64_t bits);
};

/// Deterministically derives an independent child seed, e.g. one per trial.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// i.i.d. circularly symmetric complex Gaussians, zero mean, E|x|^2 = variance.
Eigen::VectorXcd sample_complex_gaussian(int n, double variance, std::uint64_t seed);

}  // namespace lens
