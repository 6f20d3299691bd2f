#include <doctest.h>

#include <cmath>

#include "nlho/coherent.hpp"
#include "nlho/errors.hpp"
#include "nlho/spectrum.hpp"

using namespace nlho;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

}  // namespace

TEST_CASE("type 1 state: norm, centre and eigen residual") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(10.0, 2048);
  const cplx gamma(0.7, 0.2);
  const GridState psi = coherent_type1(gamma, p, g);
  CHECK(psi.norm == doctest::Approx(1.0).epsilon(1e-12));
  double mean_x = 0.0;
  for (int j = 0; j < g.N; ++j) mean_x += std::norm(psi.values[j]) * g.points[static_cast<std::size_t>(j)] * g.h;
  CHECK(mean_x == doctest::Approx(std::sqrt(2.0) * 0.7).epsilon(1e-10));
  // <P> from the phase gradient: Im(psi* D1 psi) h.
  const Eigen::VectorXcd d = first_difference(g, 4).cast<cplx>() * psi.values;
  const double mean_p = (psi.values.conjugate().cwiseProduct(d)).sum().imag() * g.h;
  CHECK(mean_p == doctest::Approx(std::sqrt(2.0) * 0.2).epsilon(1e-8));
  CHECK(psi.contained());
  const auto report = type1_report(gamma, p, g);
  CHECK(report.a_residual < 1e-6);
  CHECK(std::abs(report.z_eigenvalue - zprime_eigenvalue(gamma, p)) == 0.0);
  CHECK_THROWS_AS(coherent_type1(cplx(6.0, 0.0), p, g), DomainError);
}

TEST_CASE("Husimi average of analytic and non-analytic symbols") {
  const cplx z(0.4, -0.3);
  CHECK(std::abs(husimi_average(z, [](cplx w) { return w * w * w; }) - z * z * z) < 1e-13);
  CHECK(std::abs(husimi_average(z, [](cplx w) { return cplx(std::norm(w), 0.0); }) - (std::norm(z) + 1.0)) < 1e-13);
  const auto p = with_lambda(0.1);
  CHECK(std::abs(husimi_average(z, p) - zprime_eigenvalue(z, p)) < 1e-12);
  CHECK(zprime_eigenvalue(z, with_lambda(0.0)) == z);
  CHECK(std::abs(zprime_eigenvalue(z, with_lambda(1e-9)) - z) < 1e-8);
}

TEST_CASE("factorization B, B dagger") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(15.0, 2048);
  CHECK(factorization_residual(p, g) < 1e-12);
  const Eigen::VectorXd sym = bracket_symbol(p, g);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < sym.size(); ++i) {
    const double c = std::cosh(std::sqrt(0.1) * g.points[static_cast<std::size_t>(g.interior_begin() + i)]);
    worst = std::max(worst, std::abs(sym[i] - 1.0 / (c * c)));
  }
  CHECK(worst < 1e-6);
  CHECK(annihilation_residual(p, b_vacuum(p, g)) < 1e-6);
}

TEST_CASE("shape-invariant ground state carries the exact ground energy") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(15.0, 2048);
  CHECK(energy_expectation(p, shape_invariant_ground(p, g)) ==
        doctest::Approx(spectrum::energy_level(0, p)).epsilon(1e-8));
}

TEST_CASE("type 3 displacement") {
  const auto p = with_lambda(0.1);
  const Grid g = Grid::make(15.0, 1024);
  const Type3Result zero = coherent_type3(cplx(0.0, 0.0), p, g);
  CHECK((zero.state.values - b_vacuum(p, g).values).norm() == 0.0);
  const Type3Result r = coherent_type3(cplx(0.3, -0.2), p, g);
  CHECK(r.norm_change < 1e-8);
  CHECK(r.antihermitian < 1e-12);
  CHECK(r.steps > 0);
  CHECK(r.state.contained());
  CHECK_THROWS_AS(coherent_type3(cplx(0.3, 0.0), with_lambda(0.0), g), DomainError);
}
