#include "nlho/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlho/errors.hpp"

namespace nlho::classical {

namespace {

constexpr cplx I{0.0, 1.0};

// tanh(sqrt(lambda) X) / sqrt(lambda), -> X as lambda -> 0.
double scaled_tanh(double X, double lambda) {
  if (lambda == 0.0) return X;
  const double r = std::sqrt(lambda);
  return std::tanh(r * X) / r;
}

double scaled_sinh(double X, double lambda) {
  if (lambda == 0.0) return X;
  const double r = std::sqrt(lambda);
  return std::sinh(r * X) / r;
}

double sech2(double X, double lambda) {
  const double c = std::cosh(std::sqrt(lambda) * X);
  return 1.0 / (c * c);
}

double force_XP(double X, const OscillatorParams& params) {
  return -params.m * params.omega * params.omega * scaled_tanh(X, params.lambda) *
         sech2(X, params.lambda);
}

// Triple-jump weights composing a symmetric order-2 step up to `order`.
std::vector<double> composition_weights(int order) {
  if (order < 2 || order > 8 || order % 2 != 0) {
    throw DomainError("leapfrog order must be 2, 4, 6 or 8");
  }
  std::vector<double> weights{1.0};
  for (int p = 2; p < order; p += 2) {
    const double root = std::pow(2.0, 1.0 / (p + 1));
    const double outer = 1.0 / (2.0 - root);
    const double inner = 1.0 - 2.0 * outer;
    std::vector<double> next;
    next.reserve(weights.size() * 3);
    for (double f : {outer, inner, outer}) {
      for (double w : weights) next.push_back(f * w);
    }
    weights = std::move(next);
  }
  return weights;
}

PhaseState rk4_step(const PhaseState& s, double dt, const OscillatorParams& params) {
  auto at = [&](double dq, double dp) {
    return rhs(PhaseState{s.q + dq, s.pq + dp, s.chart, s.t}, params);
  };
  const PhaseVelocity k1 = rhs(s, params);
  const PhaseVelocity k2 = at(0.5 * dt * k1.dq, 0.5 * dt * k1.dp);
  const PhaseVelocity k3 = at(0.5 * dt * k2.dq, 0.5 * dt * k2.dp);
  const PhaseVelocity k4 = at(dt * k3.dq, dt * k3.dp);
  return PhaseState{s.q + dt / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq),
                    s.pq + dt / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp), s.chart,
                    s.t + dt};
}

}  // namespace

PhaseState to_chart(const PhaseState& state, Chart target, const OscillatorParams& params) {
  if (state.chart == target) return state;
  PhaseState out = state;
  out.chart = target;
  if (target == Chart::XP) {
    out.q = x_to_X(state.q, params);
    out.pq = p_to_P(state.q, state.pq, params);
  } else {
    out.q = X_to_x(state.q, params);
    out.pq = P_to_p(state.q, state.pq, params);
  }
  return out;
}

double hamiltonian(const PhaseState& state, const OscillatorParams& params) {
  const double m = params.m;
  const double w2 = params.omega * params.omega;
  if (state.chart == Chart::xp) {
    const double g = 1.0 + params.lambda * state.q * state.q;
    return g * state.pq * state.pq / (2.0 * m) + m * w2 * state.q * state.q / (2.0 * g);
  }
  const double th = scaled_tanh(state.q, params.lambda);
  return state.pq * state.pq / (2.0 * m) + 0.5 * m * w2 * th * th;
}

PhaseVelocity rhs(const PhaseState& state, const OscillatorParams& params) {
  const double m = params.m;
  if (state.chart == Chart::xp) {
    const double x = state.q;
    const double p = state.pq;
    const double g = 1.0 + params.lambda * x * x;
    return {g * p / m,
            -params.lambda * x * p * p / m - m * params.omega * params.omega * x / (g * g)};
  }
  return {state.pq / m, force_XP(state.q, params)};
}

Trajectory integrate_orbit(const PhaseState& initial, const OscillatorParams& params, double dt,
                           std::size_t n_steps, const IntegratorOptions& options) {
  params.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (options.scheme == Scheme::LEAPFROG_XP && initial.chart != Chart::XP) {
    throw DomainError("LEAPFROG_XP requires a state in the XP chart");
  }
  const std::size_t stride = std::max<std::size_t>(1, options.stride);
  const std::vector<double> weights = options.scheme == Scheme::LEAPFROG_XP
                                          ? composition_weights(options.leapfrog_order)
                                          : std::vector<double>{};

  Trajectory traj;
  traj.dt = dt;
  traj.samples.reserve(n_steps / stride + 2);
  traj.samples.push_back(initial);

  const double e0 = hamiltonian(initial, params);
  const double scale = e0 != 0.0 ? std::fabs(e0) : 1.0;
  double drift = 0.0;

  PhaseState s = initial;
  for (std::size_t step = 1; step <= n_steps; ++step) {
    if (options.scheme == Scheme::RK4) {
      s = rk4_step(s, dt, params);
    } else {
      for (double w : weights) {
        const double h = w * dt;
        s.pq += 0.5 * h * force_XP(s.q, params);
        s.q += h * s.pq / params.m;
        s.pq += 0.5 * h * force_XP(s.q, params);
      }
      s.t = initial.t + static_cast<double>(step) * dt;
    }
    if (!std::isfinite(s.q) || !std::isfinite(s.pq)) {
      throw IntegrationError("non-finite phase state", step);
    }
    drift = std::max(drift, std::fabs(hamiltonian(s, params) - e0) / scale);
    if (step % stride == 0 || step == n_steps) traj.samples.push_back(s);
  }
  traj.energy_drift = drift;
  return traj;
}

double measure_period(const Trajectory& trajectory) {
  const auto& xs = trajectory.samples;
  std::vector<double> crossings;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = xs[i - 1].q;
    const double b = xs[i].q;
    if (!(a < 0.0 && b >= 0.0)) continue;
    // Quadratic through the nearest three samples, root inside [t_{i-1}, t_i].
    if (xs.size() < 3) break;
    const std::size_t j = (i + 1 < xs.size()) ? i - 1 : i - 2;
    const double t0 = xs[j].t;
    const double h1 = xs[j + 1].t - t0;
    const double h2 = xs[j + 2].t - t0;
    const double y0 = xs[j].q, y1 = xs[j + 1].q, y2 = xs[j + 2].q;
    // y(s) = y0 + c1 s + c2 s^2 with s = t - t0.
    const double d1 = (y1 - y0) / h1;
    const double d2 = (y2 - y0) / h2;
    const double c2 = (d2 - d1) / (h2 - h1);
    const double c1 = d1 - c2 * h1;
    const double lo = xs[i - 1].t - t0;
    const double hi = xs[i].t - t0;
    double root = lo + (hi - lo) * (-a) / (b - a);
    if (c2 != 0.0) {
      const double disc = c1 * c1 - 4.0 * c2 * y0;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (c1 + std::copysign(sq, c1));
        const double r1 = q / c2;
        const double r2 = q != 0.0 ? y0 / q : r1;
        const double pad = 1e-9 * (hi - lo);
        if (r1 >= lo - pad && r1 <= hi + pad) {
          root = r1;
        } else if (r2 >= lo - pad && r2 <= hi + pad) {
          root = r2;
        }
      }
    } else if (c1 != 0.0) {
      root = -y0 / c1;
    }
    crossings.push_back(t0 + root);
  }
  if (crossings.size() < 2) return std::nan("");
  return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

double orbit_frequency(double amplitude, const OscillatorParams& params) {
  return params.omega / std::sqrt(1.0 + params.lambda * amplitude * amplitude);
}

double orbit_energy(double amplitude, const OscillatorParams& params) {
  // (m w^2 / 2 lambda)[1 - 1/(1 + lambda A^2)] without the 1/lambda.
  const double a2 = amplitude * amplitude;
  return 0.5 * params.m * params.omega * params.omega * a2 / (1.0 + params.lambda * a2);
}

double orbit_period(double amplitude, const OscillatorParams& params) {
  return 2.0 * std::numbers::pi / orbit_frequency(amplitude, params);
}

double exact_orbit(double amplitude, double phase, const OscillatorParams& params, double t) {
  if (1.0 + params.lambda * amplitude * amplitude <= 0.0) {
    throw DomainError("1 + lambda A^2 must be positive");
  }
  return amplitude * std::sin(orbit_frequency(amplitude, params) * t + phase);
}

cplx poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhaseState& at,
                     double h) {
  const double hq = h > 0.0 ? h : 1e-4 * (1.0 + std::fabs(at.q));
  const double hp = h > 0.0 ? h : 1e-4 * (1.0 + std::fabs(at.pq));
  const double q = at.q;
  const double p = at.pq;
  auto dq = [&](const PhaseFunction& fn, double step) {
    return (fn(q + step, p) - fn(q - step, p)) / (2.0 * step);
  };
  auto dp = [&](const PhaseFunction& fn, double step) {
    return (fn(q, p + step) - fn(q, p - step)) / (2.0 * step);
  };
  auto richardson = [](cplx coarse, cplx fine) { return (4.0 * fine - coarse) / 3.0; };
  const cplx fq = richardson(dq(f, hq), dq(f, 0.5 * hq));
  const cplx fp = richardson(dp(f, hp), dp(f, 0.5 * hp));
  const cplx gq = richardson(dq(g, hq), dq(g, 0.5 * hq));
  const cplx gp = richardson(dp(g, hp), dp(g, 0.5 * hp));
  return fq * gp - fp * gq;
}

cplx complexifier_z(double x, double p, const OscillatorParams& params) {
  const double mw = params.m * params.omega;
  const double pref = std::sqrt(mw / 2.0);
  if (params.undeformed()) return pref * x + I * p / std::sqrt(2.0 * mw);
  const double g = 1.0 + params.lambda * x * x;
  const double theta = p * std::sqrt(params.lambda * g) / mw;
  return pref * (x * std::cos(theta) + I * std::sqrt(g / params.lambda) * std::sin(theta));
}

cplx complexifier_z_series(double x, double p, const OscillatorParams& params, int terms) {
  if (terms < 1) throw DomainError("series needs at least one term");
  const double mw = params.m * params.omega;
  const double g = 1.0 + params.lambda * x * x;
  const double ratio = p / mw;
  // {x,C}_(2n) = ratio^{2n} lambda^n g^n x,  {x,C}_(2n+1) = ratio^{2n+1} lambda^n g^{n+1}.
  cplx sum = 0.0;
  cplx phase = 1.0;       // i^k
  double factorial = 1.0;  // k!
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      phase *= I;
      factorial *= k;
    }
    const int n = k / 2;
    const double lg = std::pow(params.lambda * g, n);
    const double bracket = (k % 2 == 0) ? std::pow(ratio, k) * lg * x
                                         : std::pow(ratio, k) * lg * g;
    sum += phase * (bracket / factorial);
  }
  return std::sqrt(mw / 2.0) * sum;
}

cplx complexifier_A(double X, double P, const OscillatorParams& params) {
  const double mw = params.m * params.omega;
  return std::sqrt(mw / 2.0) * X + I * P / std::sqrt(2.0 * mw);
}

cplx complexifier_Z(double X, double P, const OscillatorParams& params) {
  if (params.undeformed()) return complexifier_A(X, P, params);
  const double mw = params.m * params.omega;
  const double r = std::sqrt(params.lambda);
  return std::sqrt(mw / (2.0 * params.lambda)) * std::sinh(cplx(r * X, r * P / mw));
}

cplx bracket_ZZstar(double X, double P, const OscillatorParams& params) {
  if (params.undeformed()) return -I;
  const double r = std::sqrt(params.lambda);
  const double mw = params.m * params.omega;
  return -0.5 * I * (std::cosh(2.0 * r * X) + std::cos(2.0 * r * P / mw));
}

cplx zdot_closed(double X, double P, const OscillatorParams& params) {
  const double mw = params.m * params.omega;
  const double pref = std::sqrt(mw / 2.0);
  const double r = std::sqrt(params.lambda);
  const double c = std::cosh(r * X);
  const cplx velocity =
      P / params.m - I * params.omega * scaled_sinh(X, params.lambda) / (c * c * c);
  return pref * velocity * std::cosh(cplx(r * X, r * P / mw));
}

double zdot_check(double X, double P, const OscillatorParams& params, double h) {
  const PhaseFunction Z = [&](double q, double p) { return complexifier_Z(q, p, params); };
  const PhaseFunction H = [&](double q, double p) {
    return cplx(hamiltonian(PhaseState{q, p, Chart::XP, 0.0}, params), 0.0);
  };
  const cplx numeric = poisson_bracket(Z, H, PhaseState{X, P, Chart::XP, 0.0}, h);
  return std::abs(numeric - zdot_closed(X, P, params));
}

}  // namespace nlho::classical
