#include <doctest.h>

#include <cmath>

#include "nlho/errors.hpp"
#include "nlho/fock.hpp"
#include "nlho/spectrum.hpp"

using namespace nlho;
using cplx = std::complex<double>;

namespace {

OscillatorParams with_lambda(double l) {
  OscillatorParams p;
  p.lambda = l;
  return p;
}

}  // namespace

TEST_CASE("standard ladder") {
  const int D = 8;
  const Ladder L = ladder_ops(D);
  const Eigen::MatrixXd comm = L.a.entries * L.adag.entries - L.adag.entries * L.a.entries;
  for (int n = 0; n + 1 < D; ++n) CHECK(comm(n, n) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(comm(D - 1, D - 1) == doctest::Approx(1.0 - D).epsilon(1e-15));
  CHECK((L.adag.entries * L.a.entries - L.nop.entries).norm() < 1e-14);
  CHECK(L.a.band == Band::super);
  CHECK_THROWS_AS(ladder_ops(1), DomainError);
}

TEST_CASE("deformed ladder entries") {
  const auto p = with_lambda(0.1);
  const DeformedLadder d = deformed_ops(p, 25);
  CHECK(d.cutoff == 20);
  CHECK(d.truncated);
  // (hbar omega / 2 sqrt(v)) (n sqrt(1/4 + v) - n^2 / 2) by hand.
  const double s = std::sqrt(100.25);
  for (int n = 1; n <= 20; ++n) {
    CHECK(d.b.entries(n - 1, n) == doctest::Approx(std::sqrt(n * (s - 0.5 * n) / 10.0)).epsilon(1e-14));
    CHECK(d.bdag.entries(n, n - 1) == d.b.entries(n - 1, n));
  }
  CHECK(d.b.entries(21, 22) == 0.0);
}

TEST_CASE("hamiltonian and commutator diagonals") {
  const auto p = with_lambda(0.1);
  const int D = 12;
  const FockOperator H = hamiltonian_fock(p, D);
  const FockOperator C = commutator_bb(p, D);
  CHECK(H.band == Band::diagonal);
  const double s = std::sqrt(100.25);
  for (int n = 0; n + 2 < D; ++n) {
    const double k = n + 0.5;
    const double e = 0.05 * (2.0 * k * s - k * k - 0.25);
    CHECK(H.entries(n, n) == doctest::Approx(e).epsilon(1e-13));
    CHECK(C.entries(n, n) == doctest::Approx(spectrum::commutator_closed(n, p)).epsilon(1e-12));
    CHECK(C.entries(n, n) == doctest::Approx(0.05 * (s - k)).epsilon(1e-12));
  }
}

TEST_CASE("type 2 coherent coefficients") {
  const DeformedCoherent sho = coherent_type2(cplx(1.0, 0.5), with_lambda(0.0), 40);
  double fact = 1.0;
  const cplx beta(1.0, 0.5);
  for (int n = 0; n < 40; ++n) {
    if (n) fact *= n;
    CHECK(std::abs(sho.coeffs[n] - std::exp(-0.5 * std::norm(beta)) * std::pow(beta, n) / std::sqrt(fact)) < 1e-12);
  }
  const DeformedCoherent c = coherent_type2(cplx(0.8, 0.0), with_lambda(0.1), 21);
  CHECK(c.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.coeffs[0].real() > 0.0);
  CHECK(c.residual <= 2.0 * c.bound);
  const DeformedCoherent vac = coherent_type2(cplx(0.0, 0.0), with_lambda(0.1), 10);
  CHECK(vac.coeffs[0] == cplx(1.0, 0.0));
  CHECK(vac.coeffs.tail(9).norm() == 0.0);
  CHECK_THROWS_AS(coherent_type2(cplx(1.0, 0.0), with_lambda(0.1), 3), DomainError);
}
