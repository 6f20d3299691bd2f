#pragma once

// Grid coherent states: the complexifier type (displaced Gaussians, eigenstates
// of A) and the factorization type (exp(zeta B^dagger - zeta* B) acting on the
// B vacuum).

#include <complex>
#include <functional>

#include "nlho/complexifier.hpp"
#include "nlho/grid.hpp"

namespace nlho {

/// psi_gamma(X) = (pi b^2)^(-1/4) exp(-(X - <X>)^2 / 2b^2 + i <P> X / hbar - i <X><P> / 2 hbar),
/// <X> = sqrt(2) b Re(gamma), <P> = sqrt(2) (hbar / b) Im(gamma). Throws
/// DomainError when |<X>| + 4b does not fit inside the box.
GridState coherent_type1(cplx gamma, const OscillatorParams& params, const Grid& grid);

struct Type1Report {
  double a_residual;   ///< ||(A - gamma) psi|| / ||psi||
  double z_residual;   ///< ||(Z' - f(gamma)) psi|| / ||psi||, measured only
  cplx z_eigenvalue;   ///< f(gamma)
};

/// A from quantum_A at `order`; Z' = Z / sqrt(hbar) in the Printed
/// normalization, applied through exponential actions of the exponent.
Type1Report type1_report(cplx gamma, const OscillatorParams& params, const Grid& grid,
                         int order = 4);

/// f(gamma) = sqrt(1 / 2 lambda b^2) e^(lambda b^2) sinh(b sqrt(2 lambda) gamma); gamma
/// at lambda = 0.
cplx zprime_eigenvalue(cplx gamma, const OscillatorParams& params);

/// pi^-1 times the integral over the plane of f(g) exp(-|z - g|^2), by tensor
/// Gauss-Hermite quadrature centred at z.
cplx husimi_average(cplx z, const std::function<cplx(cplx)>& f, int quad_order = 40);
/// Same with f = zprime_eigenvalue.
cplx husimi_average(cplx z, const OscillatorParams& params, int quad_order = 40);

struct Factorization {
  GridOperator B;
  GridOperator Bdag;
};

/// B = (hbar / sqrt(2m)) D1 + sqrt(m omega^2 / 2 lambda) tanh(sqrt(lambda) X).
Factorization factorization_ops(const OscillatorParams& params, const Grid& grid, int order = 4);

/// max |(B^dag B + B B^dag)/2 - H_DD| / max |H_DD| with H_DD = -hbar^2/2m D1 D1 + W^2.
double factorization_residual(const OscillatorParams& params, const Grid& grid, int order = 4);

/// Multiplier symbol of [B, B^dagger] / hbar omega (its action on the constant
/// vector), interior points only; compare with sech^2(sqrt(lambda) X).
Eigen::VectorXd bracket_symbol(const OscillatorParams& params, const Grid& grid, int order = 4);

/// Normalized cosh(sqrt(lambda) X)^(-1 / lambda b^2), annihilated by B.
GridState b_vacuum(const OscillatorParams& params, const Grid& grid);
/// Normalized cosh(sqrt(lambda) X)^(-nu), the exact ground state of H.
GridState shape_invariant_ground(const OscillatorParams& params, const Grid& grid);

/// ||B psi|| / (sqrt(hbar omega) ||psi||).
double annihilation_residual(const OscillatorParams& params, const GridState& psi, int order = 4);

/// <psi|H|psi> / <psi|psi> with the order-4 hamiltonian_X.
double energy_expectation(const OscillatorParams& params, const GridState& psi);

struct Type3Result {
  GridState state;
  double norm_change;      ///< | ||psi(1)|| - ||psi(0)|| | / ||psi(0)||
  double antihermitian;    ///< max|G + G^dagger| / max|G|
  double b_residual;       ///< ||(B - zeta sqrt(hbar omega)) psi|| / (sqrt(hbar omega) ||psi||), measured only
  double achieved_error;   ///< accumulated step-doubling estimate
  int steps;
};

/// exp(G) phi0 with G = zeta B^dagger / sqrt(hbar omega) - conj(zeta) B / sqrt(hbar omega),
/// phi0 = b_vacuum, propagated by RK4 with step doubling on s in [0, 1] so
/// that each accepted step's error is below tol ||psi||. Throws
/// PropagationError when the step size collapses.
Type3Result coherent_type3(cplx zeta, const OscillatorParams& params, const Grid& grid,
                           double tol = 1e-12, int order = 4);

}  // namespace nlho
