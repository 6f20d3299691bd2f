#include "nlho/grid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nlho/errors.hpp"
#include "nlho/spectrum.hpp"

namespace nlho {

Grid Grid::make(double L, int N) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("grid half-width must be positive");
  if (N < 16) throw DomainError("grid needs at least 16 points");
  Grid g;
  g.L = L;
  g.N = N;
  g.h = 2.0 * L / (N - 1);
  g.points.resize(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) g.points[static_cast<std::size_t>(j)] = -L + j * g.h;
  // Exact mirror symmetry.
  for (int j = 0; j < N / 2; ++j) {
    g.points[static_cast<std::size_t>(N - 1 - j)] = -g.points[static_cast<std::size_t>(j)];
  }
  if (N % 2 == 1) g.points[static_cast<std::size_t>(N / 2)] = 0.0;
  return g;
}

Eigen::VectorXd Grid::coordinates() const {
  return Eigen::Map<const Eigen::VectorXd>(points.data(), N);
}

bool is_hermitian(const SparseComplex& M) {
  const SparseComplex diff = M - SparseComplex(M.adjoint());
  double scale = 0.0;
  for (Eigen::Index r = 0; r < M.outerSize(); ++r) {
    for (SparseComplex::InnerIterator it(M, r); it; ++it) scale = std::max(scale, std::abs(it.value()));
  }
  double worst = 0.0;
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
    for (SparseComplex::InnerIterator it(diff, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst <= 1e-12 * scale;
}

GridOperator make_operator(const Grid& grid, SparseComplex entries) {
  GridOperator op;
  op.grid = grid;
  op.entries = std::move(entries);
  op.entries.makeCompressed();
  op.hermitian = is_hermitian(op.entries);
  return op;
}

bool GridState::contained() const {
  if (values.size() == 0) return false;
  const double peak = values.cwiseAbs().maxCoeff();
  return std::abs(values[0]) < 1e-8 * peak && std::abs(values[values.size() - 1]) < 1e-8 * peak;
}

GridState make_state(const Grid& grid, Eigen::VectorXcd values) {
  if (values.size() != grid.N) throw DomainError("state length does not match grid");
  GridState s;
  s.grid = grid;
  s.norm = values.squaredNorm() * grid.h;
  s.values = std::move(values);
  if (!std::isfinite(s.norm)) throw DomainError("state norm is not finite");
  return s;
}

GridState normalized(GridState state) {
  if (!(state.norm > 0.0)) throw DomainError("cannot normalize a zero state");
  state.values /= std::sqrt(state.norm);
  state.norm = state.values.squaredNorm() * state.grid.h;
  return state;
}

namespace {

using Triplet = Eigen::Triplet<double>;

SparseReal banded(const Grid& grid, const std::vector<std::pair<int, double>>& stencil) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(grid.N) * stencil.size());
  for (int i = 0; i < grid.N; ++i) {
    for (const auto& [offset, c] : stencil) {
      const int j = i + offset;
      if (j >= 0 && j < grid.N) t.emplace_back(i, j, c);
    }
  }
  SparseReal M(grid.N, grid.N);
  M.setFromTriplets(t.begin(), t.end());
  return M;
}

SparseComplex to_complex(const SparseReal& M) { return M.cast<cplx>(); }

SparseReal diagonal(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(grid.N));
  for (int i = 0; i < grid.N; ++i) t.emplace_back(i, i, f(grid.points[static_cast<std::size_t>(i)]));
  SparseReal M(grid.N, grid.N);
  M.setFromTriplets(t.begin(), t.end());
  return M;
}

double potential(double X, const OscillatorParams& params) {
  const double th = std::tanh(std::sqrt(params.lambda) * X);
  return params.m * params.omega * params.omega / (2.0 * params.lambda) * th * th;
}

void require_deformed(const OscillatorParams& params) {
  params.validate();
  if (params.undeformed()) throw DomainError("the X-chart Hamiltonian needs lambda > 0");
}

// Centre sign: value for even n, slope for odd n (N is arbitrary).
double centre_sign(const Grid& grid, const Eigen::VectorXd& v, int n) {
  const int mid = grid.N / 2;
  double probe = 0.0;
  if (grid.N % 2 == 1) {
    probe = n % 2 == 0 ? v[mid] : v[mid + 1] - v[mid - 1];
  } else {
    probe = n % 2 == 0 ? v[mid] + v[mid - 1] : v[mid] - v[mid - 1];
  }
  return probe < 0.0 ? -1.0 : 1.0;
}

std::vector<Eigenpair> solve_levels(const OscillatorParams& params, const Grid& grid, int k,
                                    bool with_vectors) {
  const SymTridiagonal T = to_tridiagonal(params, grid);
  if (with_vectors) return eigs_tridiagonal(T, static_cast<std::size_t>(k));
  std::vector<Eigenpair> out;
  for (double e : eigvals_tridiagonal(T, static_cast<std::size_t>(k))) out.push_back({e, {}});
  return out;
}

SymTridiagonal symmetrized(const SparseReal& H) {
  SymTridiagonal T;
  const auto n = H.rows();
  T.diag.resize(static_cast<std::size_t>(n));
  T.off.resize(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < n; ++i) T.diag[static_cast<std::size_t>(i)] = H.coeff(i, i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double up = H.coeff(i, i + 1);
    const double lo = H.coeff(i + 1, i);
    if (!(up * lo > 0.0)) throw DomainError("ordering Hamiltonian is not symmetrizable on this grid");
    T.off[static_cast<std::size_t>(i)] = std::copysign(std::sqrt(up * lo), up);
  }
  return T;
}

}  // namespace

SparseReal first_difference(const Grid& grid, int order) {
  const double h = grid.h;
  if (order == 2) return banded(grid, {{-1, -0.5 / h}, {1, 0.5 / h}});
  if (order == 4) {
    return banded(grid, {{-2, 1.0 / (12.0 * h)},
                         {-1, -8.0 / (12.0 * h)},
                         {1, 8.0 / (12.0 * h)},
                         {2, -1.0 / (12.0 * h)}});
  }
  throw DomainError("difference order must be 2 or 4");
}

SparseReal second_difference(const Grid& grid, int order) {
  const double h2 = grid.h * grid.h;
  if (order == 2) return banded(grid, {{-1, 1.0 / h2}, {0, -2.0 / h2}, {1, 1.0 / h2}});
  if (order == 4) {
    return banded(grid, {{-2, -1.0 / (12.0 * h2)},
                         {-1, 16.0 / (12.0 * h2)},
                         {0, -30.0 / (12.0 * h2)},
                         {1, 16.0 / (12.0 * h2)},
                         {2, -1.0 / (12.0 * h2)}});
  }
  throw DomainError("difference order must be 2 or 4");
}

GridOperator position_op(const Grid& grid) {
  return make_operator(grid, to_complex(diagonal(grid, [](double X) { return X; })));
}

GridOperator momentum_op(const Grid& grid, const OscillatorParams& params, int order) {
  params.validate();
  return make_operator(grid, cplx(0.0, -params.hbar) * to_complex(first_difference(grid, order)));
}

GridOperator hamiltonian_X(const OscillatorParams& params, const Grid& grid, int order) {
  require_deformed(params);
  const SparseReal H = (-params.hbar * params.hbar / (2.0 * params.m)) * second_difference(grid, order) +
                       diagonal(grid, [&](double X) { return potential(X, params); });
  return make_operator(grid, to_complex(H));
}

SymTridiagonal to_tridiagonal(const OscillatorParams& params, const Grid& grid) {
  require_deformed(params);
  const double k = params.hbar * params.hbar / (2.0 * params.m * grid.h * grid.h);
  SymTridiagonal T;
  T.diag.resize(static_cast<std::size_t>(grid.N));
  T.off.assign(static_cast<std::size_t>(grid.N - 1), -k);
  for (int j = 0; j < grid.N; ++j) {
    T.diag[static_cast<std::size_t>(j)] = 2.0 * k + potential(grid.points[static_cast<std::size_t>(j)], params);
  }
  return T;
}

OracleSpectrum oracle_spectrum(const OscillatorParams& params, const Grid& grid, int k,
                               bool with_vectors) {
  if (k < 1) throw DomainError("oracle needs at least one level");
  const Grid fine = Grid::make(grid.L, 2 * grid.N - 1);
  const auto coarse_pairs = solve_levels(params, grid, k, with_vectors);
  const auto fine_pairs = solve_levels(params, fine, k, with_vectors);

  OracleSpectrum out;
  out.grid = grid;
  for (int n = 0; n < k; ++n) {
    const auto& c = coarse_pairs[static_cast<std::size_t>(n)];
    const auto& f = fine_pairs[static_cast<std::size_t>(n)];
    OracleLevel level{n, (4.0 * f.value - c.value) / 3.0, c.value, f.value, {}};
    if (with_vectors) {
      const Eigen::VectorXd vc = c.vector * centre_sign(grid, c.vector, n) / std::sqrt(grid.h);
      const Eigen::VectorXd vf = f.vector * centre_sign(fine, f.vector, n) / std::sqrt(fine.h);
      Eigen::VectorXd v(grid.N);
      for (int j = 0; j < grid.N; ++j) v[j] = (4.0 * vf[2 * j] - vc[j]) / 3.0;
      level.vector = v / std::sqrt(v.squaredNorm() * grid.h);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

int oracle_bound_count(const OscillatorParams& params, const Grid& grid) {
  const SymTridiagonal T = to_tridiagonal(params, grid);
  return static_cast<int>(sturm_count(T, spectrum::continuum_threshold(params)));
}

double default_box(const OscillatorParams& params, int top) {
  const DerivedParams d = derive(params);
  const double b = std::sqrt(d.b2);
  if (d.undeformed) return std::max(12.0 * b, b * (std::sqrt(2.0 * top + 1.0) + 10.0));
  const double kappa = depth_index(d.v) - top;
  const double reach = kappa > 0.0 ? 18.0 / (std::sqrt(params.lambda) * kappa) : 200.0 * b;
  return std::max(12.0 * b, std::min(reach, 200.0 * b));
}

Orderings hamiltonian_orderings(const OscillatorParams& params, const Grid& grid_x) {
  params.validate();
  const double lam = params.lambda;
  const double k = params.hbar * params.hbar / (2.0 * params.m);
  const double h = grid_x.h;
  auto build = [&](int which) {
    std::vector<Eigen::Triplet<double>> t;
    for (int j = 0; j < grid_x.N; ++j) {
      const double x = grid_x.points[static_cast<std::size_t>(j)];
      const double w = 1.0 + lam * x * x;
      const double c1 = (which == 1 ? 1.0 : 3.0) * lam * x;
      const double c0 = which == 1 ? 0.0 : lam;
      const double V = params.m * params.omega * params.omega * x * x / (2.0 * w);
      t.emplace_back(j, j, -k * (c0 - 2.0 * w / (h * h)) + V);
      if (j > 0) t.emplace_back(j, j - 1, -k * (w / (h * h) - c1 / (2.0 * h)));
      if (j + 1 < grid_x.N) t.emplace_back(j, j + 1, -k * (w / (h * h) + c1 / (2.0 * h)));
    }
    SparseReal H(grid_x.N, grid_x.N);
    H.setFromTriplets(t.begin(), t.end());
    return H;
  };
  return Orderings{grid_x, build(1), build(2)};
}

std::vector<double> ordering_eigenvalues(const OscillatorParams& params, const Grid& grid_x,
                                         int which, int k) {
  if (which != 1 && which != 2) throw DomainError("ordering must be 1 or 2");
  const Grid fine = Grid::make(grid_x.L, 2 * grid_x.N - 1);
  const auto pick = [&](const Orderings& o) { return symmetrized(which == 1 ? o.H1 : o.H2); };
  const auto ec = eigvals_tridiagonal(pick(hamiltonian_orderings(params, grid_x)), static_cast<std::size_t>(k));
  const auto ef = eigvals_tridiagonal(pick(hamiltonian_orderings(params, fine)), static_cast<std::size_t>(k));
  std::vector<double> out(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * ef[i] - ec[i]) / 3.0;
  return out;
}

double similarity_residual(const OscillatorParams& params, const Grid& grid_x) {
  const Orderings o = hamiltonian_orderings(params, grid_x);
  const int a = grid_x.interior_begin();
  const int b = grid_x.interior_end();
  double diff2 = 0.0;
  double ref2 = 0.0;
  for (int i = a; i < b; ++i) {
    const double xi = grid_x.points[static_cast<std::size_t>(i)];
    const double fi = 1.0 / std::sqrt(1.0 + params.lambda * xi * xi);
    for (int j = std::max(a, i - 1); j <= std::min(b - 1, i + 1); ++j) {
      const double xj = grid_x.points[static_cast<std::size_t>(j)];
      const double fj = 1.0 / std::sqrt(1.0 + params.lambda * xj * xj);
      const double sim = fi * o.H1.coeff(i, j) / fj;
      const double ref = o.H2.coeff(i, j);
      diff2 += (sim - ref) * (sim - ref);
      ref2 += ref * ref;
    }
  }
  return std::sqrt(diff2 / ref2);
}

double interior_norm(const Grid& grid, const Eigen::MatrixXcd& M) {
  const int a = grid.interior_begin();
  const int len = grid.interior_end() - a;
  return M.block(a, a, len, len).norm();
}

double interior_norm(const Grid& grid, const Eigen::VectorXcd& v) {
  const int a = grid.interior_begin();
  return v.segment(a, grid.interior_end() - a).norm();
}

}  // namespace nlho
