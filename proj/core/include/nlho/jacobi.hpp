#pragma once

// Symmetric Jacobi polynomials P_n^(a,a) on the imaginary axis.
//
// R_n(s) := i^n P_n^(a,a)(-i s) has real coefficients and parity (-1)^n, so
// everything here stays in real arithmetic. Substituting y = -i s into the
// monic recurrence p_k = y p_{k-1} - g_k p_{k-2} gives
//
//   r_k(s) = s r_{k-1}(s) + g_k r_{k-2}(s),
//   g_k    = (k-1)(k-1+2a) / ((2k+2a-1)(2k+2a-3)),
//
// and R_n = lead_n * r_n with lead_n = prod_{j=1..n} (2a+n+j) / (2^n n!).

#include <vector>

namespace nlho {

struct JacobiPoly {
  int n = 0;
  double a = 0.0;
  std::vector<double> coeffs;  ///< R_n(s) = sum_k coeffs[k] s^k
  int parity = 0;              ///< n mod 2

  double operator()(double s) const;
};

JacobiPoly make_jacobi_poly(int n, double a);

/// Leading coefficient of P_n^(a,a) in the standard normalization.
double jacobi_leading(int n, double a);

/// Monic r_n(s).
double jacobi_monic_real(int n, double a, double s);

/// R_n(s) = i^n P_n^(a,a)(-i s), standard normalization.
double jacobi_real(int n, double a, double s);

/// r_n(sinh z) / cosh^n z evaluated from t = tanh z and q2 = sech^2 z; stays
/// bounded for any z.
double jacobi_monic_homogeneous(int n, double a, double t, double q2);

/// Value and first derivative of the monic r_n at s = 0.
struct OriginJet {
  double value;
  double slope;
};
OriginJet jacobi_monic_at_origin(int n, double a);

/// R_n(sqrt(lambda) x) from the Rodrigues formula, differentiating
/// (1 + lambda x^2)^(a+n) exactly in coefficient arithmetic.
double rodrigues_eval(int n, double a, double x, double lambda);

/// 2^n n! (-xi)^(-n/2) P_n^(-xi,-xi)(y / sqrt(-xi)); tends to H_n(y) as xi -> inf.
double hermite_limit(int n, double xi, double y);

}  // namespace nlho
