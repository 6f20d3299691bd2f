#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nlho/eigenfunctions.hpp"
#include "nlho/errors.hpp"
#include "nlho/spectrum.hpp"

using namespace nlho;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

// Composite trapezoid on [-R, R]; spectrally accurate for these decaying profiles.
template <class F>
double trapezoid(F f, double R, int n) {
  const double h = 2.0 * R / n;
  double acc = 0.5 * (f(-R) + f(R));
  for (int j = 1; j < n; ++j) acc += f(-R + j * h);
  return acc * h;
}

double hermite_poly(int n, double y) {
  double h0 = 1.0, h1 = 2.0 * y;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * y * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

TEST_CASE("ground state is a power of sech") {
  const auto p = with_lambda(0.1);
  const auto phi = eigenfunction(0, p);
  const double nu = std::sqrt(100.25) - 0.5;
  CHECK(phi.nu == doctest::Approx(nu).epsilon(1e-14));
  for (double X : {0.5, 2.0, 7.0}) {
    CHECK(phi.evaluate(X) / phi.evaluate(0.0) ==
          doctest::Approx(std::pow(std::cosh(std::sqrt(0.1) * X), -nu)).epsilon(1e-12));
  }
}

TEST_CASE("normalization and orthogonality by trapezoid") {
  const auto p = with_lambda(0.1);
  std::vector<Eigenfunction> phis;
  for (int n = 0; n < 10; ++n) phis.push_back(eigenfunction(n, p));
  const double R = support_radius(phis.back());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double o = trapezoid([&](double X) { return phis[i].evaluate(X) * phis[j].evaluate(X); }, R, 20000);
      CHECK(o == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9).scale(1.0));
    }
  }
  CHECK(overlap(phis[2], phis[4]) == doctest::Approx(0.0).scale(1e-9));
}

TEST_CASE("eigenfunctions solve the X-chart equation") {
  const auto p = with_lambda(0.1);
  const double r = std::sqrt(0.1);
  for (int n = 0; n < 10; ++n) {
    const auto phi = eigenfunction(n, p);
    const double h = 1e-3;
    double worst = 0.0;
    for (double X : {-6.0, -1.3, 0.2, 2.0, 9.0}) {
      const double d2 = (-phi.evaluate(X + 2 * h) + 16 * phi.evaluate(X + h) - 30 * phi.evaluate(X) +
                         16 * phi.evaluate(X - h) - phi.evaluate(X - 2 * h)) / (12 * h * h);
      const double t = std::tanh(r * X);
      const double res = -0.5 * d2 + t * t / (2 * 0.1) * phi.evaluate(X) - phi.energy * phi.evaluate(X);
      worst = std::max(worst, std::abs(res));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("sign convention and parity") {
  const auto p = with_lambda(0.1);
  for (int n = 0; n < 10; ++n) {
    const auto phi = eigenfunction(n, p);
    if (n % 2 == 0) {
      CHECK(phi.evaluate(0.0) > 0.0);
    } else {
      CHECK(phi.evaluate(1e-3) > 0.0);
    }
    CHECK(phi.evaluate(-3.1) == (n % 2 ? -1.0 : 1.0) * phi.evaluate(3.1));
    CHECK(phi.evaluate_x(2.0) == phi.evaluate(x_to_X(2.0, p)));
    CHECK(std::isfinite(phi.evaluate(1e5)));
  }
}

TEST_CASE("levels above the spectrum are rejected") {
  CHECK_THROWS_AS(eigenfunction(10, with_lambda(0.1)), OutOfSpectrumError);
  const auto table = eigenstate_table(with_lambda(0.1));
  REQUIRE(table.size() == 10);
  CHECK(table[9].energy == spectrum::energy_level(9, with_lambda(0.1)));
}

TEST_CASE("undeformed limit uses Hermite functions") {
  const double b = 0.7;
  for (int n = 0; n <= 6; ++n) {
    const double norm = 1.0 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi) * b);
    const double sign = (n / 2) % 2 ? -1.0 : 1.0;
    for (double X : {-1.5, 0.0, 0.4, 2.2}) {
      const double y = X / b;
      CHECK(hermite_function(n, X, b) ==
            doctest::Approx(sign * norm * hermite_poly(n, y) * std::exp(-0.5 * y * y)).epsilon(1e-12).scale(1.0));
    }
  }
  OscillatorParams p = with_lambda(0.0);
  p.m = 1.0 / 0.49;
  CHECK(eigenfunction(3, p).evaluate(0.4) == doctest::Approx(hermite_function(3, 0.4, 0.7)).epsilon(1e-12));
}

TEST_CASE("small lambda approaches Hermite functions") {
  const auto p = with_lambda(1e-4);
  for (int n = 0; n <= 3; ++n) {
    const auto phi = eigenfunction(n, p);
    for (double X : {0.0, 0.8, 2.0}) CHECK(std::abs(phi.evaluate(X) - hermite_function(n, X, 1.0)) < 1e-3);
  }
}
