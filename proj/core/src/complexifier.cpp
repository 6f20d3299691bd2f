#include "nlho/complexifier.hpp"

#include <cmath>

#include "nlho/errors.hpp"
#include "nlho/matrix_exp.hpp"

namespace nlho {

namespace {

constexpr int kDenseLimit = 512;

void require_dense_size(const Grid& grid) {
  if (grid.N > kDenseLimit) throw DomainError("dense complexifier operators need N <= 512");
}

void require_deformed(const OscillatorParams& params) {
  params.validate();
  if (params.undeformed()) throw DomainError("the quantum complexifier needs lambda > 0");
}

Eigen::MatrixXcd diag_of(const Grid& grid, double (*f)(double), double scale) {
  Eigen::VectorXcd d(grid.N);
  for (int j = 0; j < grid.N; ++j) d[j] = f(scale * grid.points[static_cast<std::size_t>(j)]);
  return d.asDiagonal();
}

Eigen::MatrixXcd dense_sinh(const Eigen::MatrixXcd& M) { return 0.5 * (expm(M) - expm(-M)); }
Eigen::MatrixXcd dense_cosh(const Eigen::MatrixXcd& M) { return 0.5 * (expm(M) + expm(-M)); }

Eigen::MatrixXcd dense_D1(const Grid& grid, int order) {
  return Eigen::MatrixXcd(first_difference(grid, order).cast<cplx>());
}

CommutatorCheck compare(const Grid& grid, const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs,
                        const std::vector<Eigen::VectorXcd>& probes) {
  CommutatorCheck out{0.0, 0.0};
  const Eigen::MatrixXcd diff = lhs - rhs;
  for (const auto& psi : probes) {
    const double r = interior_norm(grid, Eigen::VectorXcd(diff * psi)) /
                     interior_norm(grid, Eigen::VectorXcd(lhs * psi));
    out.probe_residual = std::max(out.probe_residual, r);
  }
  out.matrix_residual = interior_norm(grid, diff) / interior_norm(grid, lhs);
  return out;
}

double z_prefactor(const OscillatorParams& params, ZNormalization norm) {
  const DerivedParams d = derive(params);
  const double c = std::sqrt(params.m * params.omega / (2.0 * params.lambda));
  return norm == ZNormalization::Printed ? c * std::exp(params.lambda * d.b2) : c;
}

Eigen::MatrixXcd dense_Z(const OscillatorParams& params, const Grid& grid, int order,
                         ZNormalization norm) {
  const Eigen::MatrixXcd M(complexifier_exponent(params, grid, order).cast<cplx>());
  return z_prefactor(params, norm) * dense_sinh(M);
}

}  // namespace

GridOperator quantum_A(const OscillatorParams& params, const Grid& grid, int order) {
  params.validate();
  const double b = std::sqrt(derive(params).b2);
  SparseReal X(grid.N, grid.N);
  X.reserve(Eigen::VectorXi::Constant(grid.N, 1));
  for (int j = 0; j < grid.N; ++j) X.insert(j, j) = grid.points[static_cast<std::size_t>(j)];
  const SparseReal A = (1.0 / (std::sqrt(2.0) * b)) * X + (b / std::sqrt(2.0)) * first_difference(grid, order);
  return make_operator(grid, A.cast<cplx>());
}

SparseReal complexifier_exponent(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  const double rl = std::sqrt(params.lambda);
  const double b2 = derive(params).b2;
  SparseReal X(grid.N, grid.N);
  X.reserve(Eigen::VectorXi::Constant(grid.N, 1));
  for (int j = 0; j < grid.N; ++j) X.insert(j, j) = grid.points[static_cast<std::size_t>(j)];
  return rl * X + (rl * b2) * first_difference(grid, order);
}

GridOperator quantum_Z(const OscillatorParams& params, const Grid& grid, int order,
                       ZNormalization norm) {
  require_deformed(params);
  require_dense_size(grid);
  const Eigen::MatrixXcd Z = dense_Z(params, grid, order, norm);
  return make_operator(grid, Z.sparseView());
}

GridOperator quantum_Z_series(const OscillatorParams& params, const Grid& grid, int terms) {
  require_deformed(params);
  require_dense_size(grid);
  if (terms < 1) throw DomainError("series needs at least one term");
  const double eta = derive(params).b2;
  const Eigen::MatrixXd K(second_difference(grid, 2));
  Eigen::MatrixXd term = Eigen::MatrixXd::Zero(grid.N, grid.N);
  for (int j = 0; j < grid.N; ++j) {
    term(j, j) = std::sinh(std::sqrt(params.lambda) * grid.points[static_cast<std::size_t>(j)]);
  }
  Eigen::MatrixXd total = term;
  for (int n = 1; n < terms; ++n) {
    term = (term * K - K * term) * (-0.5 * eta / n);
    total += term;
  }
  total *= std::sqrt(params.m * params.omega / (2.0 * params.lambda));
  return make_operator(grid, Eigen::MatrixXcd(total.cast<cplx>()).sparseView());
}

double interior_distance(const GridOperator& a, const GridOperator& b) {
  return interior_norm(a.grid, Eigen::MatrixXcd(a.dense() - b.dense())) / interior_norm(a.grid, a.dense());
}

std::vector<Eigen::VectorXcd> probe_states(const OscillatorParams& params, const Grid& grid) {
  const double b = std::sqrt(derive(params).b2);
  std::vector<Eigen::VectorXcd> out;
  for (double X0 : {-0.25 * grid.L, 0.0, 0.25 * grid.L}) {
    for (double k0 : {0.0, 0.5}) {
      Eigen::VectorXcd psi(grid.N);
      for (int j = 0; j < grid.N; ++j) {
        const double X = grid.points[static_cast<std::size_t>(j)];
        const double u = (X - X0) / b;
        psi[j] = std::exp(cplx(-0.5 * u * u, k0 * X / b));
      }
      out.push_back(std::move(psi));
    }
  }
  return out;
}

CommutatorCheck commutator_check_Z(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  require_dense_size(grid);
  const double lam = params.lambda;
  const double b2 = derive(params).b2;
  const Eigen::MatrixXcd Z = dense_Z(params, grid, order, ZNormalization::Printed);
  const Eigen::MatrixXcd Zd = Z.adjoint();
  const Eigen::MatrixXcd C = Z * Zd - Zd * Z;
  // cos(2 sqrt(lambda) P / m omega) = cosh(2 sqrt(lambda) b^2 D1).
  const Eigen::MatrixXcd cosP = dense_cosh(2.0 * std::sqrt(lam) * b2 * dense_D1(grid, order));
  const double k = params.m * params.omega / (2.0 * lam) * std::exp(2.0 * lam * b2) * std::sinh(lam * b2);
  const Eigen::MatrixXcd F = k * (diag_of(grid, [](double y) { return std::cosh(y); }, 2.0 * std::sqrt(lam)) + cosP);
  return compare(grid, C, F, probe_states(params, grid));
}

CommutatorCheck commutator_limit_check(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  require_dense_size(grid);
  const Eigen::MatrixXcd Z = dense_Z(params, grid, order, ZNormalization::SeriesConsistent);
  const Eigen::MatrixXcd Zd = Z.adjoint();
  const Eigen::MatrixXcd C = Z * Zd - Zd * Z;
  const Eigen::MatrixXcd F = params.hbar * Eigen::MatrixXcd::Identity(grid.N, grid.N);
  return compare(grid, C, F, probe_states(params, grid));
}

CommutatorCheck symmetric_product_check(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  require_dense_size(grid);
  const double lam = params.lambda;
  const double b2 = derive(params).b2;
  const Eigen::MatrixXcd Z = dense_Z(params, grid, order, ZNormalization::Printed);
  const Eigen::MatrixXcd Zd = Z.adjoint();
  const Eigen::MatrixXcd S = 0.5 * (Z * Zd + Zd * Z);
  // cos(sqrt(lambda) b^2 P / hbar) = cosh(sqrt(lambda) b^2 D1).
  const Eigen::MatrixXcd cosP = dense_cosh(std::sqrt(lam) * b2 * dense_D1(grid, order));
  const Eigen::MatrixXcd ch = diag_of(grid, [](double y) { return std::cosh(y); }, std::sqrt(lam));
  const double k = params.m * params.omega / (2.0 * lam) * std::exp(2.0 * lam * b2) * std::cosh(lam * b2);
  const Eigen::MatrixXcd F = k * (ch * ch - cosP * cosP);
  return compare(grid, S, F, probe_states(params, grid));
}

double eom_check_A(const OscillatorParams& params, const Grid& grid, double dt, int order) {
  require_deformed(params);
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  const SparseComplex H = hamiltonian_X(params, grid, order).entries;
  const SparseComplex A = quantum_A(params, grid, order).entries;
  const SparseComplex G = cplx(0.0, -1.0 / params.hbar) * H;  // dpsi/dt = G psi
  const Eigen::VectorXcd psi = probe_states(params, grid)[3];

  const Eigen::VectorXcd lhs = (A * (H * psi) - H * (A * psi)) / cplx(0.0, params.hbar);
  const Eigen::VectorXcd fwd = expm_action(G, A * expm_action(G, psi, dt), -dt);
  const Eigen::VectorXcd bwd = expm_action(G, A * expm_action(G, psi, -dt), dt);
  const Eigen::VectorXcd rhs = (fwd - bwd) / (2.0 * dt);
  return interior_norm(grid, Eigen::VectorXcd(lhs - rhs)) / interior_norm(grid, lhs);
}

}  // namespace nlho
