#include "nlho/spectrum.hpp"

#include <cmath>

#include "nlho/errors.hpp"

namespace nlho::spectrum {

namespace {

// v - (s - k)^2 with s = sqrt(1/4 + v), k = n + 1/2, written as
// (k - (s - sqrt v)) (sqrt v + s - k); s - sqrt v = 1/4 / (s + sqrt v).
double epsilon_factored(int n, double v) {
  const double s = std::sqrt(0.25 + v);
  const double rv = std::sqrt(v);
  const double k = n + 0.5;
  return (k - 0.25 / (s + rv)) * (rv + s - k);
}

int saturating_floor(double value) {
  if (!(value < static_cast<double>(kUnbounded))) return kUnbounded;
  return static_cast<int>(std::floor(value));
}

}  // namespace

double epsilon_formula(int n, double v) {
  if (!(v >= 0.0)) throw DomainError("v must be non-negative");
  return epsilon_factored(n, v);
}

int max_level(double v) {
  if (!(v >= 0.0)) throw DomainError("v must be non-negative");
  return saturating_floor(depth_index(v));
}

double epsilon_level(int n, double v) {
  const int top = max_level(v);
  if (n < 0 || n > top) throw OutOfSpectrumError(n, top);
  return epsilon_factored(n, v);
}

int bound_state_count(double v) {
  const int top = max_level(v);
  return top == kUnbounded ? kUnbounded : top + 1;
}

int bound_state_count(const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (d.undeformed) return kUnbounded;
  return bound_state_count(d.v);
}

double energy_level(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (n < 0) throw OutOfSpectrumError(n, 0);
  if (d.undeformed) return (n + 0.5) * params.hbar * params.omega;
  const int top = max_level(d.v);
  if (n > top) throw OutOfSpectrumError(n, top);
  return epsilon_factored(n, d.v) / d.epsilon_scale;
}

double continuum_threshold(const OscillatorParams& params) {
  params.validate();
  if (params.undeformed()) return std::numeric_limits<double>::infinity();
  return params.m * params.omega * params.omega / (2.0 * params.lambda);
}

int f_cutoff(const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (d.undeformed) return kUnbounded;
  return saturating_floor(std::sqrt(1.0 + 4.0 * d.v));
}

double f_squared(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (d.undeformed) return 1.0;
  // sqrt(1/(4v) + 1) - n/(2 sqrt v) == (sqrt(1/4 + v) - n/2) / sqrt v
  return (std::sqrt(0.25 + d.v) - 0.5 * n) / std::sqrt(d.v);
}

double f_deformation(int n, const OscillatorParams& params) {
  if (n < 0) throw DomainError("f(n) needs n >= 0");
  const int cutoff = f_cutoff(params);
  if (n > cutoff) throw TruncationError(n, cutoff);
  return std::sqrt(std::max(0.0, f_squared(n, params)));
}

HypergeometricParams hypergeometric_params(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (d.undeformed) throw DomainError("hypergeometric parameters need lambda > 0");
  const int top = max_level(d.v);
  if (n < 0 || n > top) throw OutOfSpectrumError(n, top);
  const double s = std::sqrt(0.25 + d.v);
  // sqrt(v - eps_n) = |s - (n + 1/2)|; the quantization branch is n + 1/2 - s.
  const double root = (n + 0.5) - s;
  HypergeometricParams hp{};
  hp.sigma = d.sigma;
  hp.gamma = 2.0 * d.sigma;
  hp.alpha = 2.0 * d.sigma - 0.5 - root;
  hp.beta = 2.0 * d.sigma - 0.5 + root;
  return hp;
}

double commutator_closed(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  const double hw = params.hbar * params.omega;
  if (d.undeformed) return 0.5 * hw;
  const double s = std::sqrt(0.25 + d.v);
  return 0.5 * hw * (s - (n + 0.5)) / std::sqrt(d.v);
}

LevelRecord level(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  if (d.undeformed) throw DomainError("level records need lambda > 0");
  const HypergeometricParams hp = hypergeometric_params(n, params);
  LevelRecord r{};
  r.n = n;
  r.epsilon = epsilon_level(n, d.v);
  r.energy = energy_level(n, params);
  r.f = f_deformation(n, params);
  r.decay_exponent = depth_index(d.v) - n;
  r.alpha = hp.alpha;
  r.beta = hp.beta;
  r.gamma = hp.gamma;
  r.sigma = hp.sigma;
  return r;
}

}  // namespace nlho::spectrum
