#include "lensarray/complex_erf.hpp"

#include <cmath>
#include <limits>

#include "lensarray/errors.hpp"

namespace lens {
namespace detail {

namespace {
constexpr double kTwoOverSqrtPi = 1.1283791670955126;
constexpr double kExpLimit = 705.0;  // exp argument beyond which doubles overflow
}  // namespace

std::complex<double> erf_taylor(std::complex<double> z) {
  const std::complex<double> z2 = z * z;
  std::complex<double> term = z;
  std::complex<double> sum = z;
  for (int k = 1; k < 8000; ++k) {
    term *= -z2 / static_cast<double>(k);
    const std::complex<double> contrib = term / static_cast<double>(2 * k + 1);
    sum += contrib;
    if (k > 4 && std::abs(contrib) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

std::complex<double> erf_continued_fraction(std::complex<double> z) {
  // Laplace ladder erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
  // evaluated with the modified Lentz scheme.
  const double tiny = 1e-300;
  std::complex<double> f = z;
  std::complex<double> c = z;
  std::complex<double> d = 0.0;
  bool converged = false;
  for (int k = 1; k <= 20000; ++k) {
    const double a = 0.5 * k;  // partial numerators 1/2, 1, 3/2, ...
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-15) {
      converged = true;
      break;
    }
  }
  if (!converged) throw OverflowError("erf_complex: continued fraction did not converge");

  const std::complex<double> mz2 = -z * z;
  if (mz2.real() > kExpLimit) throw OverflowError("erf_complex: exp(-z^2) overflows");
  const std::complex<double> erfc = std::exp(mz2) / (std::sqrt(M_PI) * f);
  return 1.0 - erfc;
}

}  // namespace detail

std::complex<double> erf_complex(std::complex<double> z) {
  if (std::abs(z) > 1e4) throw std::invalid_argument("erf_complex: |z| > 1e4 unsupported");
  if (z.imag() == 0.0) return {std::erf(z.real()), 0.0};

  // Odd reflection into Re >= 0 (and Im > 0 on the imaginary axis itself).
  const bool flip = (z.real() < 0.0) || (z.real() == 0.0 && z.imag() < 0.0);
  const std::complex<double> w = flip ? -z : z;

  const double x = w.real();
  const double y = w.imag();
  if (y * y - x * x > detail::kExpLimit)
    throw OverflowError("erf_complex: result magnitude exceeds double range");

  std::complex<double> value;
  if (std::abs(w) <= 4.5 || x <= 3.2) {
    // Series partial sums peak near e^{|z|^2}; refuse once that overflows.
    if (x * x + y * y > 700.0)
      throw OverflowError("erf_complex: series intermediates exceed double range");
    value = detail::erf_taylor(w);
  } else {
    value = detail::erf_continued_fraction(w);
  }
  return flip ? -value : value;
}

}  // namespace lens
