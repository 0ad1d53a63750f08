#pragma once

#include <vector>

#include <Eigen/Core>

#include "lensarray/channel.hpp"
#include "lensarray/geometry.hpp"

namespace lens {

/// Analytic partials of the focal-arc response vector with respect to the
/// source coordinates, including the second order needed by the Newton step.
struct ResponseDerivs {
  Eigen::VectorXcd da_dd;
  Eigen::VectorXcd da_dphi;
  Eigen::VectorXcd d2a_dd2;
  Eigen::VectorXcd d2a_dddphi;
  Eigen::VectorXcd d2a_dphi2;
};

/// order = 1 fills first derivatives only, order = 2 also the second.
ResponseDerivs response_grad(const LensDesign& design, const ArrayGeometry& geom,
                             const SourcePoint& source, int order = 1);

/// Which response model backs the derivative evaluation: the closed form with
/// analytic partials, or Richardson finite differences of the integral oracle.
enum class ResponseModel { kClosedForm, kIntegralOracle };

/// First-order partials by Richardson finite differences of the chosen model.
/// Steps: 1e-4 relative in d, 1e-6 rad absolute in phi.
ResponseDerivs response_grad_fd(const LensDesign& design, const ArrayGeometry& geom,
                                const SourcePoint& source, ResponseModel model,
                                double oracle_rel_tol = 1e-8);

/// Fisher information of the stacked per-path parameters [gain, d, phi] as the
/// 3L x 3L real symmetric view. Gains enter through their (Re, Im) pair; the
/// pair is collapsed jointly onto one row per path.
Eigen::MatrixXd fim(const LensDesign& design, const ArrayGeometry& geom,
                    const std::vector<PathParams>& paths, double noise_var,
                    ResponseModel model = ResponseModel::kClosedForm);

/// Full-rank internal information over [Re g, Im g, d, phi] per path
/// (4L x 4L). This is what the bound computations invert.
Eigen::MatrixXd fim_internal(const LensDesign& design, const ArrayGeometry& geom,
                             const std::vector<PathParams>& paths, double noise_var,
                             ResponseModel model = ResponseModel::kClosedForm);

struct CrlbComponents {
  double crlb_d = 0.0;    // m
  double crlb_phi = 0.0;  // rad
};
CrlbComponents crlb_components(const LensDesign& design, const ArrayGeometry& geom,
                               const std::vector<PathParams>& paths, double noise_var,
                               ResponseModel model = ResponseModel::kClosedForm);

/// Position error bound: polar-to-Cartesian transform of the information,
/// then the root trace over every path's position block of the inverse.
double peb(const LensDesign& design, const ArrayGeometry& geom,
           const std::vector<PathParams>& paths, double noise_var,
           ResponseModel model = ResponseModel::kClosedForm);

struct FisherResult {
  Eigen::MatrixXd fim;  // 3L x 3L view
  double crlb_d = 0.0;
  double crlb_phi = 0.0;
  double peb = 0.0;
};
FisherResult fisher_analysis(const LensDesign& design, const ArrayGeometry& geom,
                             const std::vector<PathParams>& paths, double noise_var);

}  // namespace lens
