#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lensarray/geometry.hpp"

namespace lens {

/// One propagation path: complex gain plus the polar source position.
struct PathParams {
  std::complex<double> gain{1.0, 0.0};
  double d = 0.0;    // m
  double phi = 0.0;  // rad
};

/// Multipath channel: path list (entry 0 = line of sight) and its response sum.
struct UserChannel {
  std::vector<PathParams> paths;
  Eigen::VectorXcd h;
};

/// Superposition of gain-weighted response vectors (lens or ULA per geometry).
UserChannel build_channel(const LensDesign& design, const ArrayGeometry& geom,
                          const std::vector<PathParams>& paths);

/// All-one pilot observation r = h + n; noise_var = 0 returns h exactly.
Eigen::VectorXcd synthesize_received(const Eigen::VectorXcd& h, double noise_var,
                                     std::uint64_t seed);

/// Receive SNR 10 log10(h^H h / (N_a sigma^2)).
double receive_snr_db(const Eigen::VectorXcd& h, double noise_var);

/// Noise variance that produces the requested receive SNR for this channel.
double noise_var_for_target_snr(const Eigen::VectorXcd& h, double snr_db);

/// Uplink superposition sum_k sqrt(p_k) s_k h_k + n.
Eigen::VectorXcd multiuser_received(const std::vector<UserChannel>& channels,
                                    const std::vector<double>& powers,
                                    const std::vector<std::complex<double>>& symbols,
                                    double noise_var, std::uint64_t seed);

}  // namespace lens
