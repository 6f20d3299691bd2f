#include <doctest.h>

#include <cmath>

#include "nlho/eigenfunctions.hpp"
#include "nlho/errors.hpp"
#include "nlho/grid.hpp"
#include "nlho/spectrum.hpp"

using namespace nlho;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

double derivative_error(int order, int N) {
  const Grid g = Grid::make(3.0, N);
  const Eigen::VectorXd x = g.coordinates();
  const Eigen::VectorXd f = x.array().sin();
  const Eigen::VectorXd d = first_difference(g, order) * f;
  double worst = 0.0;
  for (int j = g.interior_begin(); j < g.interior_end(); ++j) worst = std::max(worst, std::abs(d[j] - std::cos(x[j])));
  return worst;
}

double second_error(int order, int N) {
  const Grid g = Grid::make(3.0, N);
  const Eigen::VectorXd x = g.coordinates();
  const Eigen::VectorXd f = x.array().sin();
  const Eigen::VectorXd d = second_difference(g, order) * f;
  double worst = 0.0;
  for (int j = g.interior_begin(); j < g.interior_end(); ++j) worst = std::max(worst, std::abs(d[j] + std::sin(x[j])));
  return worst;
}

}  // namespace

TEST_CASE("grid layout") {
  const Grid g = Grid::make(5.0, 101);
  CHECK(g.h == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.points.front() == -5.0);
  CHECK(g.points.back() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(g.points[50] == doctest::Approx(0.0).scale(1e-15));
  CHECK_THROWS_AS(Grid::make(5.0, 8), DomainError);
  CHECK_THROWS_AS(Grid::make(-1.0, 100), DomainError);
}

TEST_CASE("difference stencils reach their orders") {
  CHECK(derivative_error(2, 201) / derivative_error(2, 401) == doctest::Approx(4.0).epsilon(0.05));
  CHECK(derivative_error(4, 201) / derivative_error(4, 401) == doctest::Approx(16.0).epsilon(0.05));
  CHECK(second_error(2, 201) / second_error(2, 401) == doctest::Approx(4.0).epsilon(0.05));
  CHECK(second_error(4, 201) / second_error(4, 401) == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("hamiltonian and its tridiagonal form") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(20.0, 64);
  const GridOperator H = hamiltonian_X(p, g);
  CHECK(H.hermitian);
  const SymTridiagonal T = to_tridiagonal(p, g);
  const Eigen::MatrixXcd M = H.dense();
  for (int i = 0; i < g.N; ++i) {
    CHECK(M(i, i).real() == doctest::Approx(T.diag[static_cast<std::size_t>(i)]).epsilon(1e-15));
    if (i + 1 < g.N) CHECK(M(i, i + 1).real() == doctest::Approx(T.off[static_cast<std::size_t>(i)]).epsilon(1e-15));
  }
  CHECK(position_op(g).hermitian);
  CHECK(momentum_op(g, p, 4).hermitian);
  CHECK_THROWS_AS(hamiltonian_X(with_lambda(0.0), g), DomainError);
}

TEST_CASE("oracle spectrum converges to the closed form") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(80.0, 2000);
  const auto oracle = oracle_spectrum(p, g, 10);
  for (const auto& level : oracle.levels) {
    const double e = spectrum::energy_level(level.n, p);
    // Richardson beats both raw solves.
    CHECK(std::abs(level.energy - e) < std::abs(level.fine - e));
    CHECK(std::abs(level.fine - e) < std::abs(level.coarse - e));
    CHECK(std::abs(level.energy - e) / e < 1e-6);
    CHECK(level.vector.squaredNorm() * g.h == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(oracle_bound_count(p, g) == 10);
}

TEST_CASE("oracle vectors follow the closed-form sign convention") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(40.0, 1001);
  const auto oracle = oracle_spectrum(p, g, 4);
  for (const auto& level : oracle.levels) {
    const auto phi = eigenfunction(level.n, p);
    double dot = 0.0;
    for (int j = 0; j < g.N; ++j) dot += phi.evaluate(g.points[static_cast<std::size_t>(j)]) * level.vector[j] * g.h;
    CHECK(dot == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("momentum orderings share the closed-form spectrum") {
  const auto p = with_lambda(0.1);
  // The stencils are similar only up to O(h^2).
  const double coarse = similarity_residual(p, Grid::make(60.0, 1500));
  const double fine = similarity_residual(p, Grid::make(60.0, 2999));
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  const Grid gx = Grid::make(60.0, 1500);
  const auto e1 = ordering_eigenvalues(p, gx, 1, 4);
  const auto e2 = ordering_eigenvalues(p, gx, 2, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double e = spectrum::energy_level(static_cast<int>(k), p);
    CHECK(std::abs(e1[k] - e) / e < 1e-6);
    CHECK(std::abs(e2[k] - e) / e < 1e-6);
  }
}

TEST_CASE("default box") {
  const auto p = with_lambda(0.1);
  CHECK(default_box(p, 9) >= 12.0);
  CHECK(default_box(with_lambda(0.0), 5) == doctest::Approx(std::sqrt(11.0) + 10.0));
  const auto phi = eigenfunction(9, p);
  const double L = default_box(p, 9);
  CHECK(std::abs(phi.evaluate(L)) < 1e-5 * std::abs(phi.evaluate(0.0)) + 1e-5);
}
