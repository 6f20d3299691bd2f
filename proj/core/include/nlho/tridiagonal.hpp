#pragma once

// Lowest eigenpairs of a real symmetric tridiagonal matrix: Sturm-sequence
// bisection for the values, inverse iteration for the vectors.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace nlho {

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  ///< off[i] couples rows i and i+1

  std::size_t size() const noexcept { return diag.size(); }
  /// Max absolute row sum.
  double norm_inf() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const SymTridiagonal& T, double x);

struct Eigenpair {
  double value;
  Eigen::VectorXd vector;  ///< unit 2-norm
};

/// The k lowest eigenvalues, ascending, to a few ulps of ||T||.
std::vector<double> eigvals_tridiagonal(const SymTridiagonal& T, std::size_t k);

/// The k lowest eigenpairs. Each satisfies ||T v - theta v|| < 1e-10 ||T||;
/// vectors of clustered values are orthogonalized against each other. Throws
/// SolverError with the pair index when inverse iteration does not converge.
std::vector<Eigenpair> eigs_tridiagonal(const SymTridiagonal& T, std::size_t k);

}  // namespace nlho
