#pragma once

#include <complex>

namespace lens {

/// Error function continued to complex arguments.
///
/// Exact odd symmetry is built in by reflection, real arguments defer to
/// std::erf. Arguments on the e^{±i pi/4} diagonals (the ones the lens
/// response produces) are handled by the continued fraction for any modulus.
/// Throws OverflowError once exp(Im(z)^2 - Re(z)^2) leaves double range,
/// and std::invalid_argument for |z| > 1e4.
std::complex<double> erf_complex(std::complex<double> z);

namespace detail {

// Maclaurin series; reliable while Re(z) stays small (condition ~ e^{2 Re(z)^2}).
std::complex<double> erf_taylor(std::complex<double> z);

// Laplace continued fraction for erfc, Lentz evaluation. Requires Re(z) > 0.
std::complex<double> erf_continued_fraction(std::complex<double> z);

}  // namespace detail
}  // namespace lens
