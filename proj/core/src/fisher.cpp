#include "lensarray/fisher.hpp"

#include <cmath>
#include <stdexcept>

#include "lensarray/errors.hpp"
#include "lensarray/linalg.hpp"
#include "lensarray/response.hpp"

namespace lens {

using cxd = std::complex<double>;

namespace {

// Partials of alpha(v; d, phi) and beta(v; phi) with respect to the source.
struct CoeffDerivs {
  double a_d, a_dd, a_phi, a_phiphi, a_dphi;
  double b_phi, b_phiphi;
};

CoeffDerivs coeff_derivs(const LensDesign& design, const SourcePoint& src) {
  const double lam = design.wavelength;
  const double d = src.d;
  const double c = std::cos(src.phi);
  const double s2 = std::sin(2.0 * src.phi);
  const double c2 = std::cos(2.0 * src.phi);
  CoeffDerivs cd;
  cd.a_d = M_PI * c * c / (lam * d * d);
  cd.a_dd = -2.0 * M_PI * c * c / (lam * d * d * d);
  cd.a_phi = M_PI * s2 / (lam * d);
  cd.a_phiphi = 2.0 * M_PI * c2 / (lam * d);
  cd.a_dphi = -M_PI * s2 / (lam * d * d);
  cd.b_phi = -c / lam;
  cd.b_phiphi = std::sin(src.phi) / lam;
  return cd;
}

}  // namespace

ResponseDerivs response_grad(const LensDesign& design, const ArrayGeometry& geom,
                             const SourcePoint& source, int order) {
  if (geom.kind != ArrayKind::kLensFocalArc)
    throw std::invalid_argument("response_grad: geometry is not a lens focal arc");
  source.validate();

  const int half = geom.half_count();
  const int n_a = geom.n_antennas;
  ResponseDerivs out;
  out.da_dd.resize(n_a);
  out.da_dphi.resize(n_a);
  if (order >= 2) {
    out.d2a_dd2.resize(n_a);
    out.d2a_dddphi.resize(n_a);
    out.d2a_dphi2.resize(n_a);
  }

  const CoeffDerivs cd = coeff_derivs(design, source);
  const double dy = design.aperture;
  const double de = design.electrical_aperture();
  const double sphi = std::sin(source.phi);
  const double cphi = std::cos(source.phi);

  for (int n = -half; n <= half; ++n) {
    const int i = n + half;
    const double v = geom.sin_theta(n);
    const double a = alpha(design, v, source);

    if (detail::uses_sinc_branch(a, dy)) {
      // Fallback branch is the plane-wave sinc: no distance dependence.
      const double u = de * (v - sphi);
      out.da_dd[i] = 0.0;
      out.da_dphi[i] = dy * detail::sinc_d1(u) * (-de * cphi);
      if (order >= 2) {
        out.d2a_dd2[i] = 0.0;
        out.d2a_dddphi[i] = 0.0;
        out.d2a_dphi2[i] = dy * (detail::sinc_d2(u) * de * de * cphi * cphi +
                                 detail::sinc_d1(u) * de * sphi);
      }
      continue;
    }

    const double b = beta(v, source.phi, design.wavelength);
    const detail::ResponseParts p = detail::eval_response_parts(a, b, dy, order);

    out.da_dd[i] = p.d_alpha * cd.a_d;
    out.da_dphi[i] = p.d_alpha * cd.a_phi + p.d_beta * cd.b_phi;
    if (order >= 2) {
      out.d2a_dd2[i] = p.d2_alpha2 * cd.a_d * cd.a_d + p.d_alpha * cd.a_dd;
      out.d2a_dddphi[i] = p.d2_alpha2 * cd.a_d * cd.a_phi +
                          p.d2_alpha_beta * cd.a_d * cd.b_phi + p.d_alpha * cd.a_dphi;
      out.d2a_dphi2[i] = p.d2_alpha2 * cd.a_phi * cd.a_phi +
                         2.0 * p.d2_alpha_beta * cd.a_phi * cd.b_phi +
                         p.d2_beta2 * cd.b_phi * cd.b_phi + p.d_alpha * cd.a_phiphi +
                         p.d_beta * cd.b_phiphi;
    }
  }
  return out;
}

namespace {

Eigen::VectorXcd model_vector(const LensDesign& design, const ArrayGeometry& geom,
                              const SourcePoint& src, ResponseModel model,
                              double oracle_rel_tol) {
  if (model == ResponseModel::kClosedForm) return response_vector(design, geom, src);
  const int half = geom.half_count();
  Eigen::VectorXcd out(geom.n_antennas);
  for (int n = -half; n <= half; ++n)
    out[n + half] =
        response_integral_oracle(design, geom.sin_theta(n), src, oracle_rel_tol);
  return out;
}

// 4-point Richardson central difference, error O(h^4).
Eigen::VectorXcd richardson(const std::function<Eigen::VectorXcd(double)>& f, double x,
                            double h) {
  const Eigen::VectorXcd d1 = f(x + h) - f(x - h);
  const Eigen::VectorXcd d2 = f(x + 2.0 * h) - f(x - 2.0 * h);
  return (8.0 * d1 - d2) / (12.0 * h);
}

}  // namespace

ResponseDerivs response_grad_fd(const LensDesign& design, const ArrayGeometry& geom,
                                const SourcePoint& source, ResponseModel model,
                                double oracle_rel_tol) {
  source.validate();
  const double h_d = 1e-4 * source.d;
  const double h_phi = 1e-6;

  ResponseDerivs out;
  out.da_dd = richardson(
      [&](double d) {
        return model_vector(design, geom, SourcePoint{d, source.phi}, model,
                            oracle_rel_tol);
      },
      source.d, h_d);
  out.da_dphi = richardson(
      [&](double phi) {
        return model_vector(design, geom, SourcePoint{source.d, phi}, model,
                            oracle_rel_tol);
      },
      source.phi, h_phi);
  return out;
}

namespace {

// Stacked N_a x 4L Jacobian over [Re g, Im g, d, phi] per path.
Eigen::MatrixXcd stacked_jacobian(const LensDesign& design, const ArrayGeometry& geom,
                                  const std::vector<PathParams>& paths,
                                  ResponseModel model) {
  const int l_count = static_cast<int>(paths.size());
  Eigen::MatrixXcd jac(geom.n_antennas, 4 * l_count);
  for (int l = 0; l < l_count; ++l) {
    const SourcePoint src{paths[l].d, paths[l].phi};
    const Eigen::VectorXcd a = response_vector(design, geom, src);
    ResponseDerivs g;
    if (model == ResponseModel::kClosedForm) {
      g = response_grad(design, geom, src, 1);
    } else {
      g = response_grad_fd(design, geom, src, ResponseModel::kIntegralOracle);
    }
    jac.col(4 * l + 0) = a;
    jac.col(4 * l + 1) = cxd(0.0, 1.0) * a;
    jac.col(4 * l + 2) = paths[l].gain * g.da_dd;
    jac.col(4 * l + 3) = paths[l].gain * g.da_dphi;
  }
  return jac;
}

void check_noise(double noise_var) {
  if (!(noise_var > 0.0)) throw std::invalid_argument("fim: noise_var must be > 0");
}

}  // namespace

Eigen::MatrixXd fim_internal(const LensDesign& design, const ArrayGeometry& geom,
                             const std::vector<PathParams>& paths, double noise_var,
                             ResponseModel model) {
  check_noise(noise_var);
  if (paths.empty()) throw std::invalid_argument("fim: paths must be nonempty");
  const Eigen::MatrixXcd jac = stacked_jacobian(design, geom, paths, model);
  return (2.0 / noise_var) * (jac.adjoint() * jac).real();
}

Eigen::MatrixXd fim(const LensDesign& design, const ArrayGeometry& geom,
                    const std::vector<PathParams>& paths, double noise_var,
                    ResponseModel model) {
  const Eigen::MatrixXd full = fim_internal(design, geom, paths, noise_var, model);
  const int l_count = static_cast<int>(paths.size());
  // Collapse each (Re g, Im g) pair onto one gain coordinate: the diagonal of
  // its 2x2 block is a repeated scalar and the cross couplings keep the real
  // component, which is exactly the real part of the complex-gain products.
  Eigen::MatrixXd view(3 * l_count, 3 * l_count);
  const auto row_of = [](int l, int k) { return k == 0 ? 4 * l : 4 * l + 1 + k; };
  for (int l = 0; l < l_count; ++l)
    for (int m = 0; m < l_count; ++m)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          view(3 * l + i, 3 * m + j) = full(row_of(l, i), row_of(m, j));
  return view;
}

namespace {

Eigen::MatrixXd inverse_internal_fim(const LensDesign& design, const ArrayGeometry& geom,
                                     const std::vector<PathParams>& paths,
                                     double noise_var, ResponseModel model) {
  return invert_symmetric(fim_internal(design, geom, paths, noise_var, model));
}

}  // namespace

CrlbComponents crlb_components(const LensDesign& design, const ArrayGeometry& geom,
                               const std::vector<PathParams>& paths, double noise_var,
                               ResponseModel model) {
  const Eigen::MatrixXd inv = inverse_internal_fim(design, geom, paths, noise_var, model);
  CrlbComponents out;
  double sd = 0.0, sphi = 0.0;
  for (std::size_t l = 0; l < paths.size(); ++l) {
    sd += inv(4 * l + 2, 4 * l + 2);
    sphi += inv(4 * l + 3, 4 * l + 3);
  }
  out.crlb_d = std::sqrt(sd);
  out.crlb_phi = std::sqrt(sphi);
  return out;
}

double peb(const LensDesign& design, const ArrayGeometry& geom,
           const std::vector<PathParams>& paths, double noise_var, ResponseModel model) {
  const int l_count = static_cast<int>(paths.size());
  const Eigen::MatrixXd info = fim_internal(design, geom, paths, noise_var, model);

  // Block-diagonal Jacobian d[Re g, Im g, d, phi] / d[Re g, Im g, x, y].
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(4 * l_count, 4 * l_count);
  for (int l = 0; l < l_count; ++l) {
    const double d = paths[l].d;
    const double x = -d * std::cos(paths[l].phi);
    const double y = d * std::sin(paths[l].phi);
    t(4 * l, 4 * l) = 1.0;
    t(4 * l + 1, 4 * l + 1) = 1.0;
    t(4 * l + 2, 4 * l + 2) = x / d;
    t(4 * l + 2, 4 * l + 3) = y / d;
    t(4 * l + 3, 4 * l + 2) = y / (d * d);
    t(4 * l + 3, 4 * l + 3) = -x / (d * d);
  }
  const Eigen::MatrixXd info_pos = t.transpose() * info * t;
  const Eigen::MatrixXd inv = invert_symmetric(0.5 * (info_pos + info_pos.transpose()));
  double trace = 0.0;
  for (int l = 0; l < l_count; ++l)
    trace += inv(4 * l + 2, 4 * l + 2) + inv(4 * l + 3, 4 * l + 3);
  return std::sqrt(trace);
}

FisherResult fisher_analysis(const LensDesign& design, const ArrayGeometry& geom,
                             const std::vector<PathParams>& paths, double noise_var) {
  FisherResult out;
  out.fim = fim(design, geom, paths, noise_var);
  const CrlbComponents c = crlb_components(design, geom, paths, noise_var);
  out.crlb_d = c.crlb_d;
  out.crlb_phi = c.crlb_phi;
  out.peb = peb(design, geom, paths, noise_var);
  return out;
}

}  // namespace lens
