#include "lensarray/response.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lensarray/complex_erf.hpp"
#include "lensarray/errors.hpp"
#include "lensarray/quadrature.hpp"

namespace lens {

using cxd = std::complex<double>;

namespace detail {

namespace {
const cxd kRay34 = std::polar(1.0, 3.0 * M_PI / 4.0);  // e^{i 3 pi / 4}
constexpr cxd kJ{0.0, 1.0};
const double kSqrtPi = std::sqrt(M_PI);
}  // namespace

double sinc(double x) {
  const double px = M_PI * x;
  if (std::abs(px) < 1e-4) return 1.0 - px * px / 6.0 + px * px * px * px / 120.0;
  return std::sin(px) / px;
}

double sinc_d1(double x) {
  const double px = M_PI * x;
  if (std::abs(px) < 1e-4)
    return -M_PI * px / 3.0 + M_PI * px * px * px / 30.0;
  return (px * std::cos(px) - std::sin(px)) / (M_PI * x * x);
}

double sinc_d2(double x) {
  const double px = M_PI * x;
  if (std::abs(px) < 1e-3)
    return -M_PI * M_PI / 3.0 + M_PI * M_PI * px * px / 10.0;
  return (-px * px * std::sin(px) - 2.0 * px * std::cos(px) + 2.0 * std::sin(px)) /
         (M_PI * x * x * x);
}

ResponseParts eval_response_parts(double alpha_value, double beta_value, double aperture,
                                  int order) {
  const double a = alpha_value;
  const double b = beta_value;
  const double dy = aperture;

  const cxd sqrt_a = std::sqrt(cxd(a, 0.0));
  const cxd am = kSqrtPi / (2.0 * sqrt_a);

  const double theta = M_PI * M_PI * b * b / a;
  const cxd ph = std::polar(1.0, -(theta - 5.0 * M_PI / 4.0));

  const cxd zeta1 = (a * dy + 2.0 * M_PI * b) / (2.0 * sqrt_a);
  const cxd zeta2 = (a * dy - 2.0 * M_PI * b) / (2.0 * sqrt_a);
  const cxd w = erf_complex(zeta1 * kRay34) + erf_complex(zeta2 * kRay34);

  ResponseParts out;
  out.value = am * ph * w;
  if (order < 1) return out;

  // All derivatives run through (alpha, beta); d erf(zeta e^{i3pi/4})/d zeta
  // = (2/sqrt(pi)) e^{i zeta^2} e^{i3pi/4}.
  const cxd e1 = std::exp(kJ * zeta1 * zeta1);
  const cxd e2 = std::exp(kJ * zeta2 * zeta2);
  const cxd cw = (2.0 / kSqrtPi) * kRay34;

  const cxd am_a = -kSqrtPi / (4.0 * a * sqrt_a);

  const double th_a = -theta / a;            // -pi^2 b^2 / a^2
  const double th_b = 2.0 * M_PI * M_PI * b / a;
  const cxd ph_a = -kJ * th_a * ph;
  const cxd ph_b = -kJ * th_b * ph;

  const cxd z1_a = zeta2 / (2.0 * a);
  const cxd z2_a = zeta1 / (2.0 * a);
  const cxd z1_b = M_PI / sqrt_a;
  const cxd z2_b = -M_PI / sqrt_a;

  const cxd w_a = cw * (e1 * z1_a + e2 * z2_a);
  const cxd w_b = cw * (e1 * z1_b + e2 * z2_b);

  out.d_alpha = am_a * ph * w + am * ph_a * w + am * ph * w_a;
  out.d_beta = am * (ph_b * w + ph * w_b);
  if (order < 2) return out;

  const cxd am_aa = 3.0 * kSqrtPi / (8.0 * a * a * sqrt_a);

  const double th_aa = 2.0 * theta / (a * a);
  const double th_ab = -2.0 * M_PI * M_PI * b / (a * a);
  const double th_bb = 2.0 * M_PI * M_PI / a;
  const cxd ph_aa = ph * (-th_a * th_a - kJ * th_aa);
  const cxd ph_ab = ph * (-th_a * th_b - kJ * th_ab);
  const cxd ph_bb = ph * (-th_b * th_b - kJ * th_bb);

  const cxd z1_aa = (zeta1 - 2.0 * zeta2) / (4.0 * a * a);
  const cxd z2_aa = (zeta2 - 2.0 * zeta1) / (4.0 * a * a);
  const cxd z1_ab = -M_PI / (2.0 * a * sqrt_a);
  const cxd z2_ab = M_PI / (2.0 * a * sqrt_a);

  auto w_second = [&](const cxd& z1_x, const cxd& z1_y, const cxd& z1_xy,
                      const cxd& z2_x, const cxd& z2_y, const cxd& z2_xy) {
    return cw * (e1 * (2.0 * kJ * zeta1 * z1_x * z1_y + z1_xy) +
                 e2 * (2.0 * kJ * zeta2 * z2_x * z2_y + z2_xy));
  };
  const cxd w_aa = w_second(z1_a, z1_a, z1_aa, z2_a, z2_a, z2_aa);
  const cxd w_ab = w_second(z1_a, z1_b, z1_ab, z2_a, z2_b, z2_ab);
  const cxd w_bb = w_second(z1_b, z1_b, cxd(0.0), z2_b, z2_b, cxd(0.0));

  out.d2_alpha2 = am_aa * ph * w + 2.0 * am_a * (ph_a * w + ph * w_a) +
                  am * (ph_aa * w + 2.0 * ph_a * w_a + ph * w_aa);
  out.d2_alpha_beta = am_a * (ph_b * w + ph * w_b) +
                      am * (ph_ab * w + ph_a * w_b + ph_b * w_a + ph * w_ab);
  out.d2_beta2 = am * (ph_bb * w + 2.0 * ph_b * w_b + ph * w_bb);
  return out;
}

}  // namespace detail

cxd response_closed_form(const LensDesign& design, double sin_theta,
                         const SourcePoint& source) {
  source.validate();
  const double a = alpha(design, sin_theta, source);
  if (detail::uses_sinc_branch(a, design.aperture)) {
    return {response_far_field_sinc(design.aperture, sin_theta, source.phi,
                                    design.wavelength),
            0.0};
  }
  const double b = beta(sin_theta, source.phi, design.wavelength);
  return detail::eval_response_parts(a, b, design.aperture, 0).value;
}

cxd response_integral_oracle(const LensDesign& design, double sin_theta,
                             const SourcePoint& source, double rel_tol) {
  source.validate();
  if (rel_tol < 1e-12)
    throw std::invalid_argument("response_integral_oracle: rel_tol below 1e-12");
  if (std::abs(sin_theta) > 1.0)
    throw std::invalid_argument("response_integral_oracle: |sin_theta| must be <= 1");

  const double k0 = design.wavenumber();
  const double f = design.focal_radius;
  const double f0 = design.left_focal;
  const double lam = design.wavelength;
  const double d = source.d;
  const double sp = std::sin(source.phi);
  const double v = sin_theta;
  const bool two_foci = design.variant == LensVariant::kDesign2;

  const Integrand integrand = [=](double y) -> cxd {
    const double leg_source = std::sqrt(d * d + y * y - 2.0 * d * y * sp);
    const double leg_arc = std::sqrt(f * f + y * y + 2.0 * y * f * v);
    double phase = -k0 * leg_source - k0 * (leg_arc - std::hypot(f, y));
    if (two_foci) phase += k0 * (std::hypot(f0, y) - f0);
    const double amp = lam * lam / (16.0 * M_PI * M_PI * leg_source * leg_arc);
    return std::polar(amp, phase);
  };

  const cxd raw = integrate_complex(integrand, -design.aperture / 2.0,
                                    design.aperture / 2.0, rel_tol);
  return raw * (16.0 * M_PI * M_PI * f * d / (lam * lam)) * std::polar(1.0, k0 * d);
}

double response_far_field_sinc(double aperture, double sin_theta, double phi,
                               double wavelength) {
  const double de = aperture / wavelength;
  return aperture * detail::sinc(de * sin_theta - de * std::sin(phi));
}

Eigen::VectorXcd response_vector(const LensDesign& design, const ArrayGeometry& geom,
                                 const SourcePoint& source) {
  if (geom.kind != ArrayKind::kLensFocalArc)
    throw std::invalid_argument("response_vector: geometry is not a lens focal arc");
  if (geom.n_antennas != 2 * static_cast<int>(std::floor(design.electrical_aperture())) + 1)
    throw std::invalid_argument("response_vector: geometry does not match the design");
  const int half = geom.half_count();
  Eigen::VectorXcd out(geom.n_antennas);
  for (int n = -half; n <= half; ++n)
    out[n + half] = response_closed_form(design, geom.sin_theta(n), source);
  return out;
}

Eigen::VectorXcd ula_response_vector(const ArrayGeometry& geom, const SourcePoint& source) {
  if (geom.kind != ArrayKind::kUlaHalfWavelength)
    throw std::invalid_argument("ula_response_vector: geometry is not a ULA");
  source.validate();
  const double k0 = 2.0 * M_PI / geom.wavelength;
  const double d = source.d;
  const double sp = std::sin(source.phi);
  const double dd = geom.spacing;
  const int half = geom.half_count();
  Eigen::VectorXcd out(geom.n_antennas);
  for (int n = -half; n <= half; ++n) {
    const double dn = std::sqrt(d * d + n * n * dd * dd - 2.0 * n * d * dd * sp);
    // d_n - d computed cancellation-free.
    const double excess = (n * n * dd * dd - 2.0 * n * d * dd * sp) / (dn + d);
    out[n + half] = (d / dn) * std::polar(1.0, -k0 * excess);
  }
  return out;
}

WindowDescriptor window_edges(const LensDesign& design, const SourcePoint& source) {
  source.validate();
  const double f = design.focal_radius;
  const double dy = design.aperture;
  const double s = std::sin(source.phi);
  const double c2 = std::cos(source.phi) * std::cos(source.phi);
  const double inv_f0 =
      design.variant == LensVariant::kDesign2 ? 1.0 / design.left_focal : 0.0;
  const double ratio = f / dy;

  const double free1 = f * inv_f0 - 2.0 * f * s / dy - f * c2 / source.d;
  const double free2 = f * inv_f0 + 2.0 * f * s / dy - f * c2 / source.d;
  const double disc1 = ratio * ratio - free1;
  const double disc2 = ratio * ratio - free2;
  if (disc1 < 0.0 || disc2 < 0.0)
    throw DegenerateWindowError("window_edges: no real window edge");

  WindowDescriptor w;
  w.v1 = -ratio + std::sqrt(disc1);
  w.v2 = ratio - std::sqrt(disc2);
  if (std::abs(w.v1) >= 1.0 || std::abs(w.v2) >= 1.0)
    throw DegenerateWindowError("window_edges: edge outside visible range");
  w.center = 0.5 * (w.v1 + w.v2);
  w.width = std::abs(w.v1 - w.v2);
  w.center_approx = s;
  w.width_approx = design.variant == LensVariant::kDesign2
                       ? dy * std::abs(inv_f0 - c2 / source.d)
                       : dy * c2 / source.d;
  return w;
}

cxd window_function(const LensDesign& design, double sin_theta, const SourcePoint& source) {
  source.validate();
  const double a = alpha(design, sin_theta, source);
  if (a == 0.0) return 0.0;
  const double b = beta(sin_theta, source.phi, design.wavelength);
  if (detail::uses_sinc_branch(a, design.aperture)) {
    // Keep |w| continuous across the fallback: w = a_sinc / (amplitude * phase).
    const cxd sqrt_a = std::sqrt(cxd(a, 0.0));
    const cxd am = std::sqrt(M_PI) / (2.0 * sqrt_a);
    const double theta = M_PI * M_PI * b * b / a;
    const cxd ph = std::polar(1.0, -(theta - 5.0 * M_PI / 4.0));
    const double sv =
        response_far_field_sinc(design.aperture, sin_theta, source.phi, design.wavelength);
    return sv / (am * ph);
  }
  const cxd sqrt_a = std::sqrt(cxd(a, 0.0));
  const cxd zeta1 = (a * design.aperture + 2.0 * M_PI * b) / (2.0 * sqrt_a);
  const cxd zeta2 = (a * design.aperture - 2.0 * M_PI * b) / (2.0 * sqrt_a);
  return erf_complex(zeta1 * detail::kRay34) + erf_complex(zeta2 * detail::kRay34);
}

MeasuredWindow measure_window(const LensDesign& design, const SourcePoint& source,
                              double threshold_db, int grid_points) {
  if (!(threshold_db < 0.0))
    throw std::invalid_argument("measure_window: threshold_db must be < 0");
  if (grid_points < 16) throw std::invalid_argument("measure_window: grid too coarse");
  source.validate();

  double width_guess = 4.0 * design.wavelength / design.aperture;
  try {
    width_guess = std::max(width_guess, window_edges(design, source).width_approx);
  } catch (const DegenerateWindowError&) {
  }
  const double sp = std::sin(source.phi);
  const double lo = std::max(sp - 4.0 * width_guess, -1.0 + 1e-9);
  const double hi = std::min(sp + 4.0 * width_guess, 1.0 - 1e-9);

  std::vector<double> v(grid_points), p(grid_points);
  double peak = 0.0;
  int peak_idx = 0;
  for (int i = 0; i < grid_points; ++i) {
    v[i] = lo + (hi - lo) * i / (grid_points - 1);
    p[i] = std::norm(window_function(design, v[i], source));
    if (p[i] > peak) {
      peak = p[i];
      peak_idx = i;
    }
  }
  if (!(peak > 0.0)) throw NoWindowError("measure_window: window power is zero");
  const double thr = peak * std::pow(10.0, threshold_db / 10.0);

  int left = peak_idx;
  while (left > 0 && p[left - 1] >= thr) --left;
  int right = peak_idx;
  while (right + 1 < grid_points && p[right + 1] >= thr) ++right;
  if (left == 0 || right == grid_points - 1)
    throw NoWindowError("measure_window: window extends past the scan range");

  const auto interp = [&](int inside, int outside) {
    return v[inside] +
           (thr - p[inside]) * (v[outside] - v[inside]) / (p[outside] - p[inside]);
  };
  return {interp(left, left - 1), interp(right, right + 1)};
}

}  // namespace lens
