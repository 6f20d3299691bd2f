#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "nlho/params.hpp"

namespace nlho::classical {

using cplx = std::complex<double>;

/// Which canonical pair a PhaseState holds: the original (x, p) or the
/// transformed (X, P) in which the kinetic term is P^2/2m.
enum class Chart { xp, XP };

struct PhaseState {
  double q = 0.0;
  double pq = 0.0;
  Chart chart = Chart::xp;
  double t = 0.0;
};

struct PhaseVelocity {
  double dq;
  double dp;
};

struct Trajectory {
  std::vector<PhaseState> samples;
  double dt = 0.0;
  /// max_t |E(t) - E(0)| / |E(0)| (absolute when E(0) == 0).
  double energy_drift = 0.0;
};

enum class Scheme {
  RK4,
  /// Stormer-Verlet kick-drift-kick in the XP chart, composed by the
  /// triple-jump to `leapfrog_order`.
  LEAPFROG_XP,
};

struct IntegratorOptions {
  Scheme scheme = Scheme::RK4;
  int leapfrog_order = 8;  ///< 2, 4, 6 or 8
  /// Keep every `stride`-th sample (the last one is always kept).
  std::size_t stride = 1;
};

PhaseState to_chart(const PhaseState& state, Chart target, const OscillatorParams& params);

double hamiltonian(const PhaseState& state, const OscillatorParams& params);
PhaseVelocity rhs(const PhaseState& state, const OscillatorParams& params);

Trajectory integrate_orbit(const PhaseState& initial, const OscillatorParams& params, double dt,
                           std::size_t n_steps, const IntegratorOptions& options = {});

/// Mean period from successive upward zero crossings of q(t), each located by
/// quadratic interpolation through three samples. Returns NaN with fewer than
/// two crossings.
double measure_period(const Trajectory& trajectory);

// Exact amplitude-dependent orbit x(t) = A sin(Omega t + Phi).
double orbit_frequency(double amplitude, const OscillatorParams& params);
double orbit_energy(double amplitude, const OscillatorParams& params);
double orbit_period(double amplitude, const OscillatorParams& params);
double exact_orbit(double amplitude, double phase, const OscillatorParams& params, double t);

using PhaseFunction = std::function<cplx(double q, double p)>;

/// {f, g} = df/dq dg/dp - df/dp dg/dq by central differences with one
/// Richardson step (error O(h^4)). `h <= 0` selects 1e-4 (1 + |coordinate|).
cplx poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhaseState& at,
                     double h = 0.0);

// Complex phase-space coordinates generated by the complexifier C = T / omega.
// All carry dimension (action)^(1/2); see README for the hbar convention.
cplx complexifier_z(double x, double p, const OscillatorParams& params);
/// Partial sum over the first `terms` brackets {x, C}_(n).
cplx complexifier_z_series(double x, double p, const OscillatorParams& params, int terms);
cplx complexifier_Z(double X, double P, const OscillatorParams& params);
cplx complexifier_A(double X, double P, const OscillatorParams& params);

/// Closed form of {Z, Z*}_(X,P).
cplx bracket_ZZstar(double X, double P, const OscillatorParams& params);
/// Closed form of dZ/dt along the flow.
cplx zdot_closed(double X, double P, const OscillatorParams& params);
/// |{Z, H}_numeric - zdot_closed|.
double zdot_check(double X, double P, const OscillatorParams& params, double h = 0.0);

}  // namespace nlho::classical
