#pragma once

// Bound-state eigenfunctions of the tanh^2 well in the X chart,
//
//   phi_n(X) = N_n cosh(y)^(-nu) R_n(sinh y),  y = sqrt(lambda) X,
//
// with R_n the symmetric Jacobi polynomial of parameter a = 1 - 2 sigma on the
// imaginary axis and nu = sqrt(1/4 + v) - 1/2. Evaluation goes through the
// homogeneous (tanh, sech^2) form so nothing overflows at large |X|.
//
// Sign convention: phi_n(0) > 0 for even n, phi_n'(0) > 0 for odd n.
// Normalization is in the X measure; x-chart values are phi_n(X(x)) without
// the Jacobian dX/dx = (1 + lambda x^2)^(-1/2).

#include <vector>

#include "nlho/jacobi.hpp"
#include "nlho/params.hpp"

namespace nlho {

struct Eigenfunction {
  int n = 0;
  double norm_const = 1.0;  ///< N_n, signed by the convention above
  double nu = 0.0;
  double energy = 0.0;
  JacobiPoly poly;          ///< R_n; empty coefficients when undeformed
  OscillatorParams params;

  double evaluate(double X) const;
  double evaluate_x(double x) const;
  /// Same function without N_n applied.
  double unnormalized(double X) const;
};

inline constexpr double kDefaultNormTol = 1e-10;

/// Builds phi_n with N_n from normalize(). lambda = 0 yields the Hermite
/// function of width b. Throws OutOfSpectrumError above the last bound level.
Eigenfunction eigenfunction(int n, const OscillatorParams& params, double tol = kDefaultNormTol);

/// N_n such that the integral of |phi_n|^2 dX is 1, by adaptive Gauss-Kronrod
/// over [0, X_c] (parity doubles it); X_c is where the integrand drops below
/// 1e-18 of its peak. Throws QuadratureError if the relative error estimate
/// exceeds tol.
double normalize(int n, const OscillatorParams& params, double tol = kDefaultNormTol);

/// Integral of phi_m phi_n dX by the same quadrature.
double overlap(const Eigenfunction& a, const Eigenfunction& b, double tol = kDefaultNormTol);

/// Half-width beyond which |phi|^2 < 1e-18 of its peak.
double support_radius(const Eigenfunction& phi);

struct EigenstateRow {
  int n;
  double energy;
  double norm_const;
  std::vector<double> coeffs;
};

/// One row per bound level; requires lambda > 0.
std::vector<EigenstateRow> eigenstate_table(const OscillatorParams& params,
                                            double tol = kDefaultNormTol);

/// Normalized Hermite function of width b (the lambda = 0 eigenfunction), with
/// the same sign convention.
double hermite_function(int n, double X, double b);

}  // namespace nlho
