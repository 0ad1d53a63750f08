#include "lensarray/linalg.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lensarray/errors.hpp"

namespace lens {

Eigen::Vector2d solve_least_squares(const Eigen::Matrix2d& a, const Eigen::Vector2d& b) {
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(1);
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularMatrixError("solve_least_squares: rank-deficient system");
  return svd.solve(b);
}

namespace {

template <typename Matrix>
Matrix invert_selfadjoint(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": not square");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - Matrix(m.adjoint())).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument(std::string(what) + ": input not hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  if (eig.info() != Eigen::Success)
    throw SingularMatrixError(std::string(what) + ": eigendecomposition failed");
  const auto& vals = eig.eigenvalues();
  const double vmax = vals.cwiseAbs().maxCoeff();
  if (!(vals.minCoeff() > 1e-14 * vmax))
    throw SingularMatrixError(std::string(what) + ": matrix numerically singular");

  return eig.eigenvectors() * vals.cwiseInverse().asDiagonal() *
         eig.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXcd invert_hermitian(const Eigen::MatrixXcd& m) {
  return invert_selfadjoint(m, "invert_hermitian");
}

Eigen::MatrixXd invert_symmetric(const Eigen::MatrixXd& m) {
  return invert_selfadjoint(m, "invert_symmetric");
}

}  // namespace lens
