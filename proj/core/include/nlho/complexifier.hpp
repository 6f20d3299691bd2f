#pragma once

// Quantum complexifier operators on a grid. With b^2 = hbar / m omega and
// D1 the first difference,
//
//   M = sqrt(lambda) X + sqrt(lambda) b^2 D1   (= sqrt(lambda) X + i sqrt(lambda) P / m omega)
//   Z = c sinh(M),  c = sqrt(m omega / 2 lambda) [e^(lambda b^2)]
//
// The commutator series sums to sinh(M) with no extra factor, so two
// normalizations are offered: SeriesConsistent (without e^(lambda b^2)) and
// Printed (with it). The closed-form commutator and symmetric product below
// are consistent with the Printed normalization.

#include <vector>

#include "nlho/grid.hpp"

namespace nlho {

enum class ZNormalization { SeriesConsistent, Printed };

/// Dimensionless A = X / (sqrt(2) b) + b D1 / sqrt(2).
GridOperator quantum_A(const OscillatorParams& params, const Grid& grid, int order = 4);

/// The real matrix M above (sparse).
SparseReal complexifier_exponent(const OscillatorParams& params, const Grid& grid, int order = 2);

/// Dense Z for N <= 512. Throws RangeError when exp(M) overflows.
GridOperator quantum_Z(const OscillatorParams& params, const Grid& grid, int order = 2,
                       ZNormalization norm = ZNormalization::SeriesConsistent);

/// sqrt(m omega / 2 lambda) sum_{n < terms} (b^2/2)^n (-1)^n / n! [S, D2]_(n),
/// S = diag(sinh(sqrt(lambda) X)), D2 the 3-point second difference and
/// [S, D2]_(n) = [[S, D2]_(n-1), D2].
GridOperator quantum_Z_series(const OscillatorParams& params, const Grid& grid, int terms);

/// Interior-block relative Frobenius distance between two operators.
double interior_distance(const GridOperator& a, const GridOperator& b);

/// Smooth wavepackets exp(-(X - X0)^2 / 2b^2 + i k0 X / b) at
/// X0 in {-L/4, 0, L/4}, k0 in {0, 1/2}.
std::vector<Eigen::VectorXcd> probe_states(const OscillatorParams& params, const Grid& grid);

struct CommutatorCheck {
  /// max over probes of ||(lhs - rhs) psi||_int / ||lhs psi||_int
  double probe_residual;
  /// interior-block ||lhs - rhs||_F / ||lhs||_F, reported only
  double matrix_residual;
};

/// [Z, Z^dagger] (Printed normalization) against
/// (m omega / 2 lambda) e^(2 lambda b^2) sinh(lambda b^2) [cosh(2 sqrt(lambda) X) + cos(2 sqrt(lambda) P / m omega)].
CommutatorCheck commutator_check_Z(const OscillatorParams& params, const Grid& grid, int order = 4);

/// [Z, Z^dagger] (SeriesConsistent) against hbar I; meaningful for small lambda.
CommutatorCheck commutator_limit_check(const OscillatorParams& params, const Grid& grid,
                                       int order = 4);

/// (Z Z^dagger + Z^dagger Z) / 2 (Printed) against
/// (m omega / 2 lambda) e^(2 lambda b^2) cosh(lambda b^2) [cosh^2(sqrt(lambda) X) - cos^2(sqrt(lambda) b^2 P / hbar)].
CommutatorCheck symmetric_product_check(const OscillatorParams& params, const Grid& grid,
                                        int order = 4);

/// Heisenberg derivative of A on a probe state: ||(1/i hbar)[A, H] psi - dA/dt psi|| / ||[A,H] psi / hbar||
/// with dA/dt from central differences of exp(iHt/hbar) A exp(-iHt/hbar) at +-dt.
double eom_check_A(const OscillatorParams& params, const Grid& grid, double dt, int order = 4);

}  // namespace nlho
