#pragma once

// Uniform symmetric grids, finite-difference operators with Dirichlet closure
// (the wavefunction vanishes outside the sampled points), and the
// finite-difference eigensolver used as the spectral oracle.

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nlho/matrix_exp.hpp"
#include "nlho/params.hpp"
#include "nlho/tridiagonal.hpp"

namespace nlho {

using cplx = std::complex<double>;
using SparseReal = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct Grid {
  double L = 0.0;  ///< half-width
  int N = 0;
  double h = 0.0;  ///< 2L / (N - 1)
  std::vector<double> points;

  /// Throws DomainError unless N >= 16 and L > 0.
  static Grid make(double L, int N);

  // Operator identities are compared on [N/8, 7N/8) only.
  int interior_begin() const noexcept { return N / 8; }
  int interior_end() const noexcept { return 7 * N / 8; }
  Eigen::VectorXd coordinates() const;
};

struct GridOperator {
  Grid grid;
  SparseComplex entries;
  bool hermitian = false;  ///< measured: max|M - M^dagger| < 1e-12 max|M|

  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(entries); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return entries * v; }
};

GridOperator make_operator(const Grid& grid, SparseComplex entries);
bool is_hermitian(const SparseComplex& M);

struct GridState {
  Grid grid;
  Eigen::VectorXcd values;
  double norm = 0.0;  ///< sum |psi_j|^2 h

  /// Both end values below 1e-8 of the peak magnitude.
  bool contained() const;
};

GridState make_state(const Grid& grid, Eigen::VectorXcd values);
/// Rescales to unit grid norm.
GridState normalized(GridState state);

/// Antisymmetric central first difference, order 2 or 4.
SparseReal first_difference(const Grid& grid, int order = 2);
/// Symmetric second difference, order 2 (3-point) or 4 (5-point).
SparseReal second_difference(const Grid& grid, int order = 2);

GridOperator position_op(const Grid& grid);
/// -i hbar d/dX.
GridOperator momentum_op(const Grid& grid, const OscillatorParams& params, int order = 2);

/// -hbar^2/2m D2 + (m omega^2 / 2 lambda) tanh^2(sqrt(lambda) X).
GridOperator hamiltonian_X(const OscillatorParams& params, const Grid& grid, int order = 2);
/// The order-2 hamiltonian_X as a symmetric tridiagonal.
SymTridiagonal to_tridiagonal(const OscillatorParams& params, const Grid& grid);

struct OracleLevel {
  int n;
  double energy;  ///< Richardson value (4 E_{h/2} - E_h) / 3
  double coarse;  ///< E_h
  double fine;    ///< E_{h/2}
  /// Extrapolated eigenvector on the coarse points, unit grid norm, with the
  /// sign fixed by the centre value (even n) or centre slope (odd n).
  Eigen::VectorXd vector;
};

struct OracleSpectrum {
  Grid grid;
  std::vector<OracleLevel> levels;
};

/// The k lowest levels of hamiltonian_X from order-2 tridiagonal solves on
/// `grid` and on the 2N - 1 point refinement of the same box, combined by one
/// Richardson step.
OracleSpectrum oracle_spectrum(const OscillatorParams& params, const Grid& grid, int k,
                               bool with_vectors = true);

/// Eigenvalues of the order-2 hamiltonian_X below m omega^2 / 2 lambda.
int oracle_bound_count(const OscillatorParams& params, const Grid& grid);

/// Box half-width covering the decay of level `top` (see README).
double default_box(const OscillatorParams& params, int top);

// x-chart Hamiltonians from the two momentum orderings (order-2 stencils).
struct Orderings {
  Grid grid;
  SparseReal H1;
  SparseReal H2;
};
Orderings hamiltonian_orderings(const OscillatorParams& params, const Grid& grid_x);

/// Lowest k eigenvalues of H1 (which = 1) or H2 (which = 2): the tridiagonal
/// is symmetrized by diagonal similarity, solved on h and h/2, Richardson
/// combined.
std::vector<double> ordering_eigenvalues(const OscillatorParams& params, const Grid& grid_x,
                                         int which, int k);

/// Interior-block ||F H1 F^-1 - H2||_F / ||H2||_F, F = diag((1 + lambda x^2)^(-1/2)).
double similarity_residual(const OscillatorParams& params, const Grid& grid_x);

/// Frobenius norm of the interior block of M.
double interior_norm(const Grid& grid, const Eigen::MatrixXcd& M);
/// 2-norm of the interior slice of v.
double interior_norm(const Grid& grid, const Eigen::VectorXcd& v);

}  // namespace nlho
