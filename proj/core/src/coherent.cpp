#include "nlho/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlho/errors.hpp"
#include "nlho/matrix_exp.hpp"
#include "nlho/quadrature.hpp"

namespace nlho {

namespace {

void require_deformed(const OscillatorParams& params) {
  params.validate();
  if (params.undeformed()) throw DomainError("this construction needs lambda > 0");
}

double max_abs(const SparseComplex& M) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < M.outerSize(); ++r) {
    for (SparseComplex::InnerIterator it(M, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

SparseReal tanh_wall(const OscillatorParams& params, const Grid& grid) {
  const double amp = std::sqrt(params.m * params.omega * params.omega / (2.0 * params.lambda));
  SparseReal W(grid.N, grid.N);
  W.reserve(Eigen::VectorXi::Constant(grid.N, 1));
  for (int j = 0; j < grid.N; ++j) {
    W.insert(j, j) = amp * std::tanh(std::sqrt(params.lambda) * grid.points[static_cast<std::size_t>(j)]);
  }
  return W;
}

GridState cosh_power(const OscillatorParams& params, const Grid& grid, double power) {
  Eigen::VectorXcd v(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    v[j] = std::exp(-power * log_cosh(std::sqrt(params.lambda) * grid.points[static_cast<std::size_t>(j)]));
  }
  return normalized(make_state(grid, std::move(v)));
}

}  // namespace

GridState coherent_type1(cplx gamma, const OscillatorParams& params, const Grid& grid) {
  params.validate();
  const double b = std::sqrt(derive(params).b2);
  const double X0 = std::sqrt(2.0) * b * gamma.real();
  const double P0 = std::sqrt(2.0) * params.hbar / b * gamma.imag();
  if (!(std::abs(X0) + 4.0 * b < grid.L)) throw DomainError("displaced Gaussian does not fit the box");
  const double amp = std::pow(std::numbers::pi * b * b, -0.25);
  Eigen::VectorXcd v(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    const double X = grid.points[static_cast<std::size_t>(j)];
    const double u = (X - X0) / b;
    v[j] = amp * std::exp(cplx(-0.5 * u * u, (P0 * X - 0.5 * X0 * P0) / params.hbar));
  }
  return make_state(grid, std::move(v));
}

cplx zprime_eigenvalue(cplx gamma, const OscillatorParams& params) {
  params.validate();
  if (params.undeformed()) return gamma;
  const double lb2 = params.lambda * derive(params).b2;
  return std::sqrt(1.0 / (2.0 * lb2)) * std::exp(lb2) * std::sinh(std::sqrt(2.0 * lb2) * gamma);
}

Type1Report type1_report(cplx gamma, const OscillatorParams& params, const Grid& grid, int order) {
  const GridState psi = coherent_type1(gamma, params, grid);
  const double scale = psi.values.norm();
  Type1Report r{};
  const SparseComplex A = quantum_A(params, grid, order).entries;
  r.a_residual = (A * psi.values - gamma * psi.values).norm() / scale;
  r.z_eigenvalue = zprime_eigenvalue(gamma, params);
  if (params.undeformed()) {
    r.z_residual = r.a_residual;
    return r;
  }
  const SparseComplex M = complexifier_exponent(params, grid, order).cast<cplx>();
  const double lb2 = params.lambda * derive(params).b2;
  const Eigen::VectorXcd sinhM =
      0.5 * (expm_action(M, psi.values, 1.0) - expm_action(M, psi.values, -1.0));
  const Eigen::VectorXcd Zpsi = std::sqrt(1.0 / (2.0 * lb2)) * std::exp(lb2) * sinhM;
  r.z_residual = (Zpsi - r.z_eigenvalue * psi.values).norm() / scale;
  return r;
}

cplx husimi_average(cplx z, const std::function<cplx(cplx)>& f, int quad_order) {
  if (quad_order < 1) throw DomainError("quadrature order must be positive");
  const GaussRule rule = gauss_hermite(quad_order);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      acc += rule.weights[i] * rule.weights[j] * f(z + cplx(rule.nodes[i], rule.nodes[j]));
    }
  }
  return acc / std::numbers::pi;
}

cplx husimi_average(cplx z, const OscillatorParams& params, int quad_order) {
  return husimi_average(z, [&](cplx g) { return zprime_eigenvalue(g, params); }, quad_order);
}

Factorization factorization_ops(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  const double c = params.hbar / std::sqrt(2.0 * params.m);
  const SparseReal D1 = first_difference(grid, order);
  const SparseReal W = tanh_wall(params, grid);
  const SparseReal B = c * D1 + W;
  const SparseReal Bd = SparseReal(B.transpose());
  return {make_operator(grid, B.cast<cplx>()), make_operator(grid, Bd.cast<cplx>())};
}

double factorization_residual(const OscillatorParams& params, const Grid& grid, int order) {
  const Factorization f = factorization_ops(params, grid, order);
  const double c = params.hbar / std::sqrt(2.0 * params.m);
  const SparseComplex D1 = first_difference(grid, order).cast<cplx>();
  const SparseComplex W = tanh_wall(params, grid).cast<cplx>();
  const SparseComplex HDD = SparseComplex(-(c * c) * (D1 * D1)) + SparseComplex(W * W);
  const SparseComplex sym = 0.5 * SparseComplex(f.Bdag.entries * f.B.entries + f.B.entries * f.Bdag.entries);
  return max_abs(SparseComplex(sym - HDD)) / max_abs(HDD);
}

Eigen::VectorXd bracket_symbol(const OscillatorParams& params, const Grid& grid, int order) {
  const Factorization f = factorization_ops(params, grid, order);
  const SparseComplex C = f.B.entries * f.Bdag.entries - f.Bdag.entries * f.B.entries;
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(grid.N);
  const Eigen::VectorXcd rows = C * ones / (params.hbar * params.omega);
  const int a = grid.interior_begin();
  return rows.segment(a, grid.interior_end() - a).real();
}

GridState b_vacuum(const OscillatorParams& params, const Grid& grid) {
  require_deformed(params);
  return cosh_power(params, grid, 1.0 / (params.lambda * derive(params).b2));
}

GridState shape_invariant_ground(const OscillatorParams& params, const Grid& grid) {
  require_deformed(params);
  return cosh_power(params, grid, depth_index(derive(params).v));
}

double annihilation_residual(const OscillatorParams& params, const GridState& psi, int order) {
  const Factorization f = factorization_ops(params, psi.grid, order);
  return (f.B.entries * psi.values).norm() /
         (std::sqrt(params.hbar * params.omega) * psi.values.norm());
}

double energy_expectation(const OscillatorParams& params, const GridState& psi) {
  const SparseComplex H = hamiltonian_X(params, psi.grid, 4).entries;
  return (psi.values.dot(H * psi.values)).real() / psi.values.squaredNorm();
}

Type3Result coherent_type3(cplx zeta, const OscillatorParams& params, const Grid& grid, double tol,
                           int order) {
  require_deformed(params);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const Factorization f = factorization_ops(params, grid, order);
  const double unit = std::sqrt(params.hbar * params.omega);
  const SparseComplex G = (zeta / unit) * f.Bdag.entries - (std::conj(zeta) / unit) * f.B.entries;

  Type3Result out{b_vacuum(params, grid), 0.0, 0.0, 0.0, 0.0, 0};
  out.antihermitian = max_abs(SparseComplex(G + SparseComplex(G.adjoint()))) / std::max(max_abs(G), 1e-300);
  Eigen::VectorXcd psi = out.state.values;
  const double n0 = psi.norm();

  const auto rk4 = [&](const Eigen::VectorXcd& y, double ds) {
    const Eigen::VectorXcd k1 = G * y;
    const Eigen::VectorXcd k2 = G * (y + 0.5 * ds * k1);
    const Eigen::VectorXcd k3 = G * (y + 0.5 * ds * k2);
    const Eigen::VectorXcd k4 = G * (y + ds * k3);
    return Eigen::VectorXcd(y + (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  };

  if (zeta != cplx(0.0, 0.0)) {
    double s = 0.0;
    double ds = std::min(1.0, 1.0 / std::max(norm1(G), 1e-300));
    while (s < 1.0) {
      ds = std::min(ds, 1.0 - s);
      const Eigen::VectorXcd full = rk4(psi, ds);
      const Eigen::VectorXcd half = rk4(rk4(psi, 0.5 * ds), 0.5 * ds);
      const double err = (half - full).norm() / 15.0;
      const double target = tol * half.norm();
      if (err <= target) {
        psi = half + (half - full) / 15.0;
        s += ds;
        out.achieved_error += err / half.norm();
        ++out.steps;
      }
      const double grow = err > 0.0 ? 0.9 * std::pow(target / err, 0.2) : 2.0;
      ds *= std::clamp(grow, 0.2, 2.0);
      if (ds < 1e-12) throw PropagationError("displacement step size collapsed", err / half.norm());
    }
  }
  out.norm_change = std::abs(psi.norm() - n0) / n0;
  out.b_residual = (f.B.entries * psi - zeta * unit * psi).norm() / (unit * psi.norm());
  out.state = make_state(grid, std::move(psi));
  return out;
}

}  // namespace nlho
