#pragma once

#include <complex>
#include <functional>

namespace lens {

using Integrand = std::function<std::complex<double>(double)>;

/// Adaptive bisection with an embedded 5/3-point Gauss pair. The estimated
/// error is kept below rel_tol relative to the integral magnitude, falling
/// back to an absolute bar when the integral itself cancels to near zero.
/// Throws QuadratureError when the depth limit is reached and
/// std::invalid_argument for a >= b or rel_tol < 1e-14.
std::complex<double> integrate_complex(const Integrand& f, double a, double b,
                                       double rel_tol = 1e-10);

namespace detail {
// Single fixed 5-point Gauss-Legendre panel (exact through degree 9).
std::complex<double> gauss5(const Integrand& f, double a, double b);
}  // namespace detail

}  // namespace lens
