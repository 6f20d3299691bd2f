#pragma once

// Physical constants of the oscillator, derived dimensionless numbers, and the
// canonical map (x, p) <-> (X, P) that turns the position-dependent kinetic
// term into the standard P^2/2m form with a tanh^2 potential.
//
// Units are the caller's business; natural units m = omega = hbar = 1 are the
// documented defaults.

namespace nlho {

struct OscillatorParams {
  double m = 1.0;
  double omega = 1.0;
  double lambda = 0.1;
  double hbar = 1.0;

  /// Throws DomainError unless m, omega, hbar > 0, lambda >= 0, all finite.
  void validate() const;

  /// lambda == 0 exactly: every formula dispatches to its analytic limit.
  bool undeformed() const noexcept { return lambda == 0.0; }
};

struct DerivedParams {
  double v;              ///< m^2 omega^2 / (hbar^2 lambda^2); +inf when undeformed
  double sigma;          ///< 1/2 + 1/2 sqrt(1/4 + v)
  double b2;             ///< hbar / (m omega)
  double xi;             ///< 1 / (lambda b^2); +inf when undeformed
  double epsilon_scale;  ///< 2m / (lambda hbar^2), maps E -> epsilon
  bool undeformed;
};

DerivedParams derive(const OscillatorParams& params);

/// sqrt(1/4 + v) - 1/2, the Poschl-Teller depth index. Largest real n with a
/// non-negative decay exponent.
double depth_index(double v);

// Canonical coordinate maps. All are total on the reals; lambda = 0 is the
// identity.
double x_to_X(double x, const OscillatorParams& params);
double X_to_x(double X, const OscillatorParams& params);
double p_to_P(double x, double p, const OscillatorParams& params);
double P_to_p(double X, double P, const OscillatorParams& params);

/// log(cosh(y)) without overflow for large |y| and without loss for small |y|.
double log_cosh(double y);

}  // namespace nlho
