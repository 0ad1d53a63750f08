#pragma once

#include <Eigen/Core>

namespace lens {

/// Normal-equation least squares (A^H A)^{-1} A^H b for the 2x2 systems used
/// by the coarse initializer. Throws SingularMatrixError above condition 1e12.
Eigen::Vector2d solve_least_squares(const Eigen::Matrix2d& a, const Eigen::Vector2d& b);

/// Inverse of a Hermitian positive definite matrix via eigendecomposition.
/// Validates hermitian symmetry to 1e-12 and rejects eigenvalue ratios below
/// 1e-14 with SingularMatrixError.
Eigen::MatrixXcd invert_hermitian(const Eigen::MatrixXcd& m);

/// Real symmetric positive definite specialization of invert_hermitian.
Eigen::MatrixXd invert_symmetric(const Eigen::MatrixXd& m);

}  // namespace lens
