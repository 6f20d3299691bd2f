#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "nlho/errors.hpp"
#include "nlho/matrix_exp.hpp"
#include "nlho/quadrature.hpp"
#include "nlho/tridiagonal.hpp"

using namespace nlho;

namespace {

SymTridiagonal random_tridiagonal(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTridiagonal T;
  for (std::size_t i = 0; i < n; ++i) T.diag.push_back(u(rng) + 0.01 * i);
  for (std::size_t i = 0; i + 1 < n; ++i) T.off.push_back(u(rng));
  return T;
}

Eigen::MatrixXd dense(const SymTridiagonal& T) {
  const auto n = static_cast<Eigen::Index>(T.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) M(i, i) = T.diag[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) M(i, i + 1) = M(i + 1, i) = T.off[static_cast<std::size_t>(i)];
  return M;
}

Eigen::MatrixXcd random_complex(int n, double scale, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = {scale * g(rng), scale * g(rng)};
  return A;
}

}  // namespace

TEST_CASE("tridiagonal eigenpairs against a dense solver") {
  const auto T = random_tridiagonal(60, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(T));
  const auto values = eigvals_tridiagonal(T, 12);
  const auto pairs = eigs_tridiagonal(T, 12);
  for (std::size_t k = 0; k < 12; ++k) {
    const double ref = es.eigenvalues()[static_cast<Eigen::Index>(k)];
    CHECK(values[k] == doctest::Approx(ref).epsilon(1e-13).scale(1.0));
    CHECK(pairs[k].value == doctest::Approx(ref).epsilon(1e-13).scale(1.0));
    const Eigen::VectorXd r = T.apply(pairs[k].vector) - pairs[k].value * pairs[k].vector;
    CHECK(r.norm() < 1e-10 * T.norm_inf());
    CHECK(std::abs(std::abs(pairs[k].vector.dot(es.eigenvectors().col(static_cast<Eigen::Index>(k)))) - 1.0) < 1e-9);
  }
  CHECK(sturm_count(T, es.eigenvalues()[5] + 1e-9) == 6);
}

TEST_CASE("degenerate cluster gets orthogonal vectors") {
  // Two decoupled identical blocks give exactly doubled eigenvalues.
  SymTridiagonal T;
  T.diag = {2, 1, 3, 2, 1, 3};
  T.off = {0.5, 0.2, 0.0, 0.5, 0.2};
  const auto pairs = eigs_tridiagonal(T, 2);
  CHECK(pairs[0].value == doctest::Approx(pairs[1].value).epsilon(1e-14));
  CHECK(std::abs(pairs[0].vector.dot(pairs[1].vector)) < 1e-12);
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive([](double x) { return std::exp(-x * x); }, -5.0, 5.0, 1e-13, 4);
  CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(5.0)).epsilon(1e-13));
  CHECK(r.error < 1e-10);
  const auto s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(s.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("Gauss-Hermite moments") {
  const auto rule = gauss_hermite(20);
  REQUIRE(rule.nodes.size() == 20);
  const double sp = std::sqrt(std::numbers::pi);
  double m0 = 0, m2 = 0, m4 = 0, m38 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i], w = rule.weights[i];
    m0 += w;
    m2 += w * x * x;
    m4 += w * std::pow(x, 4);
    m38 += w * std::pow(x, 38);
  }
  CHECK(m0 == doctest::Approx(sp).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(sp / 2).epsilon(1e-14));
  CHECK(m4 == doctest::Approx(3 * sp / 4).epsilon(1e-14));
  // (2k-1)!! sqrt(pi) / 2^k with k = 19: still exact at degree 38 < 40.
  double dfact = 1.0;
  for (int j = 1; j <= 37; j += 2) dfact *= j;
  CHECK(m38 == doctest::Approx(dfact * sp / std::pow(2.0, 19)).epsilon(1e-11));
}

TEST_CASE("expm against Eigen's matrix exponential") {
  for (double scale : {0.01, 0.3, 2.0}) {
    const Eigen::MatrixXcd A = random_complex(20, scale, 11);
    const Eigen::MatrixXcd ref = A.exp();
    CHECK((expm(A) - ref).norm() / ref.norm() < 1e-12);
  }
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(3, 3) * 800.0;
  CHECK_THROWS_AS(expm(big), RangeError);
}

TEST_CASE("expm_action matches dense expm") {
  const Eigen::MatrixXcd A = random_complex(30, 0.4, 5);
  SparseComplex S = A.sparseView();
  const Eigen::VectorXcd v = Eigen::VectorXcd::LinSpaced(30, -1.0, 1.0);
  for (double t : {0.5, -1.0, 3.0}) {
    const Eigen::VectorXcd ref = expm(t * A) * v;
    CHECK((expm_action(S, v, t) - ref).norm() / ref.norm() < 1e-12);
  }
  CHECK(norm1(S) == doctest::Approx(norm1(A)).epsilon(1e-15));
}
