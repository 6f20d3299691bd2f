#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlho/complexifier.hpp"
#include "nlho/errors.hpp"

using namespace nlho;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

Eigen::VectorXcd hermite_state(const Grid& g, int n) {
  Eigen::VectorXcd v(g.N);
  for (int j = 0; j < g.N; ++j) {
    const double X = g.points[static_cast<std::size_t>(j)];
    const double gauss = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * X * X);
    v[j] = n == 0 ? gauss : std::sqrt(2.0) * X * gauss;
  }
  return v;
}

}  // namespace

TEST_CASE("A lowers Hermite functions") {
  const Grid g = Grid::make(10.0, 2048);
  const GridOperator A = quantum_A(with_lambda(0.1), g, 4);
  const Eigen::VectorXcd psi0 = hermite_state(g, 0);
  const Eigen::VectorXcd psi1 = hermite_state(g, 1);
  CHECK(A.apply(psi0).norm() / psi0.norm() < 1e-6);
  CHECK((A.apply(psi1) - psi0).norm() / psi0.norm() < 1e-6);
}

TEST_CASE("Z equals its commutator series") {
  const auto p = with_lambda(0.05);
  const Grid g = Grid::make(25.0, 128);
  const GridOperator Z = quantum_Z(p, g);
  CHECK(interior_distance(Z, quantum_Z_series(p, g, 20)) < 1e-8);
  CHECK(interior_distance(Z, quantum_Z_series(p, g, 3)) > interior_distance(Z, quantum_Z_series(p, g, 6)));
  const GridOperator Zp = quantum_Z(p, g, 2, ZNormalization::Printed);
  CHECK(interior_distance(Zp, Z) > 0.0);
  CHECK(Zp.dense()(10, 10).real() / Z.dense()(10, 10).real() == doctest::Approx(std::exp(0.05)).epsilon(1e-12));
}

TEST_CASE("Z tends to A at small lambda") {
  const auto p = with_lambda(1e-8);
  const Grid g = Grid::make(8.0, 256);
  CHECK(interior_distance(quantum_Z(p, g, 2), quantum_A(p, g, 2)) < 1e-6);
}

TEST_CASE("dense limits and domain") {
  CHECK_THROWS_AS(quantum_Z(with_lambda(0.1), Grid::make(10.0, 600)), DomainError);
  CHECK_THROWS_AS(quantum_Z(with_lambda(0.0), Grid::make(10.0, 64)), DomainError);
}

TEST_CASE("commutator identities on probe states") {
  const Grid g = Grid::make(8.0, 256);
  CHECK(probe_states(with_lambda(0.05), g).size() == 6);
  CHECK(commutator_check_Z(with_lambda(0.05), g).probe_residual < 1e-4);
  CHECK(commutator_limit_check(with_lambda(1e-6), g).probe_residual < 1e-4);
  CHECK(symmetric_product_check(with_lambda(0.05), g).probe_residual < 1e-5);
}

TEST_CASE("Heisenberg derivative of A is second order in dt") {
  const auto p = with_lambda(0.05);
  const Grid g = Grid::make(8.0, 256);
  const double coarse = eom_check_A(p, g, 0.02);
  const double fine = eom_check_A(p, g, 0.01);
  CHECK(coarse < 1e-3);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));
}
