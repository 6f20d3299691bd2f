#pragma once

// Closed-form bound-state spectrum of the tanh^2 well, the bound-state count,
// the hypergeometric parameter bookkeeping and the Fock deformation f(n).

#include <limits>

#include "nlho/params.hpp"

namespace nlho::spectrum {

/// Returned by the counting functions in the undeformed (lambda = 0) branch.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

struct LevelRecord {
  int n;
  double epsilon;         ///< dimensionless energy 2mE / (lambda hbar^2)
  double energy;
  double f;               ///< deformation f(n)
  double decay_exponent;  ///< sqrt(1/4 + v) - 1/2 - n, >= 0 for bound levels
  double alpha;
  double beta;            ///< == n + 1
  double gamma;
  double sigma;
};

/// Raw closed form v - [sqrt(1/4 + v) - (n + 1/2)]^2, no range check.
double epsilon_formula(int n, double v);
/// Checked version; throws OutOfSpectrumError for n > max_level(v).
double epsilon_level(int n, double v);

/// Highest bound index; levels with zero decay exponent count as bound.
int max_level(double v);
int bound_state_count(double v);
int bound_state_count(const OscillatorParams& params);

double energy_level(int n, const OscillatorParams& params);
/// Dissociation threshold m omega^2 / 2 lambda (+inf when undeformed).
double continuum_threshold(const OscillatorParams& params);

/// Largest n with f(n)^2 >= 0, i.e. floor(sqrt(1 + 4v)).
int f_cutoff(const OscillatorParams& params);
double f_squared(int n, const OscillatorParams& params);
/// Positive root; throws TruncationError beyond f_cutoff.
double f_deformation(int n, const OscillatorParams& params);

struct HypergeometricParams {
  double alpha;
  double beta;
  double gamma;
  double sigma;
};

/// alpha, beta from the branch of sqrt(v - epsilon_n) that satisfies the
/// quantization condition beta = n + 1.
HypergeometricParams hypergeometric_params(int n, const OscillatorParams& params);

/// Printed (hbar omega / 2) weighted value of [b, b^dagger] on |n>:
/// (hbar omega / 2 sqrt(v)) [sqrt(1/4 + v) - (n + 1/2)].
double commutator_closed(int n, const OscillatorParams& params);

LevelRecord level(int n, const OscillatorParams& params);

}  // namespace nlho::spectrum
