#pragma once

#include <Eigen/Dense>

#include "gpd/qlinalg.hpp"

namespace gpd {

Eigen::MatrixXcd to_complex(const QMatrix& m);
Eigen::VectorXcd to_complex(const QVec& v);

// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

double spectral_norm(const Eigen::MatrixXcd& m);

// Operator norm of t acting on the inner-product space whose Gram matrix is
// the (exact, positive definite) q: computes ||C t C^{-1}||_2 with q = C*C.
double operator_norm_with_gram(const Eigen::MatrixXcd& t, const QMatrix& q);

// Smallest eigenvalue of t viewed as a self-adjoint operator on the space
// with Gram matrix q; t must satisfy q t = t^* q (checked by callers).
double min_eigenvalue_with_gram(const Eigen::MatrixXcd& t, const QMatrix& q);

}  // namespace gpd
