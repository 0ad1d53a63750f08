#pragma once

#include <complex>

#include <Eigen/Core>

#include "lensarray/geometry.hpp"

namespace lens {

/// Closed-form focal-arc response at beamspace coordinate sin_theta for a
/// spherical-wave point source. Uses the principal complex square root for
/// negative curvature and falls back to the aperture sinc once the quadratic
/// phase across the aperture drops below 1e-3 rad.
std::complex<double> response_closed_form(const LensDesign& design, double sin_theta,
                                          const SourcePoint& source);

/// Reference response: adaptive quadrature of the aperture superposition
/// integral with exact distances, scaled onto the same normalization as the
/// closed form (constant lens phase offset dropped).
std::complex<double> response_integral_oracle(const LensDesign& design, double sin_theta,
                                              const SourcePoint& source,
                                              double rel_tol = 1e-10);

/// Plane-wave limit D_y * sinc(D~ sin_theta - D~ sin_phi).
double response_far_field_sinc(double aperture, double sin_theta, double phi,
                               double wavelength);

/// Length-N_a response vector sampled at the focal-arc antennas.
Eigen::VectorXcd response_vector(const LensDesign& design, const ArrayGeometry& geom,
                                 const SourcePoint& source);

/// Spherical-wavefront response of the half-wavelength ULA (center element 1).
Eigen::VectorXcd ula_response_vector(const ArrayGeometry& geom, const SourcePoint& source);

/// Exact erf-zero window edges plus the closed-form center/width laws.
WindowDescriptor window_edges(const LensDesign& design, const SourcePoint& source);

/// erf-pair window factor of the response (the energy-focusing term).
std::complex<double> window_function(const LensDesign& design, double sin_theta,
                                     const SourcePoint& source);

/// Edges where |window_function|^2 crosses threshold_db below its peak,
/// measured on a dense grid with linear interpolation at the crossings.
struct MeasuredWindow {
  double lo = 0.0;
  double hi = 0.0;
};
MeasuredWindow measure_window(const LensDesign& design, const SourcePoint& source,
                              double threshold_db, int grid_points = 4096);

namespace detail {

double sinc(double x);
double sinc_d1(double x);
double sinc_d2(double x);

inline bool uses_sinc_branch(double alpha_value, double aperture) {
  const double half = aperture / 2.0;
  return std::abs(alpha_value) * half * half < 1e-3;
}

/// Response value and partials with respect to (alpha, beta); order 0/1/2
/// controls how many derivative levels are filled.
struct ResponseParts {
  std::complex<double> value{};
  std::complex<double> d_alpha{}, d_beta{};
  std::complex<double> d2_alpha2{}, d2_alpha_beta{}, d2_beta2{};
};
ResponseParts eval_response_parts(double alpha_value, double beta_value, double aperture,
                                  int order);

}  // namespace detail
}  // namespace lens
