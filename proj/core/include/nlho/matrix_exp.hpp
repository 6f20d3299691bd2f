#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace nlho {

using SparseComplex = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

/// exp(A) by degree-13 Pade with scaling and squaring. Throws RangeError when
/// the result would overflow.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A);

/// exp(t A) v by scaled Taylor series, for operators too large to
/// exponentiate densely. Terms are summed until they drop below tol ||v||.
Eigen::VectorXcd expm_action(const SparseComplex& A, const Eigen::VectorXcd& v, double t = 1.0,
                             double tol = 1e-15);

/// Induced 1-norm (max column sum).
double norm1(const Eigen::MatrixXcd& A);
double norm1(const SparseComplex& A);

}  // namespace nlho
