#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nlho/classical.hpp"

using namespace nlho;
using namespace nlho::classical;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

}  // namespace

TEST_CASE("hamiltonian is chart independent") {
  const auto p = with_lambda(0.3);
  for (double x : {-2.0, 0.0, 0.4, 3.0}) {
    for (double pr : {-1.0, 0.2, 2.0}) {
      const PhaseState a{x, pr, Chart::xp, 0.0};
      const PhaseState b = to_chart(a, Chart::XP, p);
      CHECK(hamiltonian(b, p) == doctest::Approx(hamiltonian(a, p)).epsilon(1e-13));
      CHECK(to_chart(b, Chart::xp, p).q == doctest::Approx(x).epsilon(1e-13));
    }
  }
}

TEST_CASE("frequency law") {
  for (double l : {0.0, 0.1, 1.0}) {
    for (double A : {0.5, 1.0, 3.0}) {
      const auto p = with_lambda(l);
      CHECK(orbit_frequency(A, p) == doctest::Approx(1.0 / std::sqrt(1.0 + l * A * A)).epsilon(1e-15));
      CHECK(orbit_period(A, p) == doctest::Approx(2.0 * std::numbers::pi * std::sqrt(1.0 + l * A * A)).epsilon(1e-15));
    }
  }
}

TEST_CASE("RK4 follows the exact sinusoid") {
  const auto p = with_lambda(0.1);
  const double A = 2.0;
  const double T = orbit_period(A, p);
  const auto traj = integrate_orbit({A, 0.0, Chart::xp, 0.0}, p, T / 2000.0, 4000);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    worst = std::max(worst, std::abs(s.q - exact_orbit(A, std::numbers::pi / 2.0, p, s.t)));
  }
  CHECK(worst < 1e-9);
  CHECK(traj.energy_drift < 1e-9);
}

TEST_CASE("leapfrog drift is second order at order 2") {
  const auto p = with_lambda(0.5);
  const PhaseState start = to_chart({1.5, 0.0, Chart::xp, 0.0}, Chart::XP, p);
  const double T = orbit_period(1.5, p);
  IntegratorOptions opt;
  opt.scheme = Scheme::LEAPFROG_XP;
  opt.leapfrog_order = 2;
  const double coarse = integrate_orbit(start, p, T / 200.0, 2000, opt).energy_drift;
  const double fine = integrate_orbit(start, p, T / 400.0, 4000, opt).energy_drift;
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));
  opt.leapfrog_order = 8;
  CHECK(integrate_orbit(start, p, T / 200.0, 2000, opt).energy_drift < 1e-9);
}

TEST_CASE("period measurement on a synthetic trajectory") {
  Trajectory traj;
  traj.dt = 0.01;
  const double T0 = 3.7;
  for (int i = 0; i < 2000; ++i) {
    const double t = i * traj.dt;
    traj.samples.push_back({std::sin(2.0 * std::numbers::pi * t / T0 + 0.3), 0.0, Chart::xp, t});
  }
  CHECK(measure_period(traj) == doctest::Approx(T0).epsilon(1e-7));
  traj.samples.resize(100);
  CHECK(std::isnan(measure_period(traj)));
}

TEST_CASE("Poisson bracket of elementary functions") {
  const PhaseFunction q = [](double a, double) { return cplx(a, 0.0); };
  const PhaseFunction pp = [](double, double b) { return cplx(b, 0.0); };
  const PhaseFunction q2 = [](double a, double) { return cplx(a * a, 0.0); };
  const PhaseState at{0.7, -1.2, Chart::XP, 0.0};
  CHECK(std::abs(poisson_bracket(q, pp, at) - 1.0) < 1e-12);
  CHECK(std::abs(poisson_bracket(q2, pp, at) - 1.4) < 1e-10);
  CHECK(std::abs(poisson_bracket(pp, q, at) + 1.0) < 1e-12);
}

TEST_CASE("complexifier series converges to the closed form") {
  const auto p = with_lambda(0.1);
  const cplx exact = complexifier_z(1.0, 0.5, p);
  double previous = std::abs(complexifier_z_series(1.0, 0.5, p, 2) - exact);
  for (int terms : {5, 10, 20}) {
    const double err = std::abs(complexifier_z_series(1.0, 0.5, p, terms) - exact);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(std::abs(complexifier_z_series(1.0, 0.5, p, 40) - exact) < 1e-12);
}

TEST_CASE("complexifier brackets at random points") {
  const auto p = with_lambda(0.25);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const PhaseFunction Z = [&](double X, double P) { return complexifier_Z(X, P, p); };
  const PhaseFunction Zs = [&](double X, double P) { return std::conj(complexifier_Z(X, P, p)); };
  const PhaseFunction A = [&](double X, double P) { return complexifier_A(X, P, p); };
  const PhaseFunction As = [&](double X, double P) { return std::conj(complexifier_A(X, P, p)); };
  for (int k = 0; k < 20; ++k) {
    const double X = u(rng);
    const double P = u(rng);
    const PhaseState at{X, P, Chart::XP, 0.0};
    CHECK(std::abs(poisson_bracket(Z, Zs, at) - bracket_ZZstar(X, P, p)) < 1e-7);
    CHECK(std::abs(poisson_bracket(A, As, at) - cplx(0.0, -1.0)) < 1e-8);
    CHECK(zdot_check(X, P, p) < 1e-6);
  }
}
