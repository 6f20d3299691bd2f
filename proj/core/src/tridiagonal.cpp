#include "nlho/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlho/errors.hpp"

namespace nlho {

double SymTridiagonal::norm_inf() const {
  double best = 0.0;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(off[i - 1]);
    if (i + 1 < n) row += std::abs(off[i]);
    best = std::max(best, row);
  }
  return best;
}

Eigen::VectorXd SymTridiagonal::apply(const Eigen::VectorXd& x) const {
  const std::size_t n = diag.size();
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    double acc = diag[i] * x[ii];
    if (i > 0) acc += off[i - 1] * x[ii - 1];
    if (i + 1 < n) acc += off[i] * x[ii + 1];
    y[ii] = acc;
  }
  return y;
}

std::size_t sturm_count(const SymTridiagonal& T, double x) {
  const std::size_t n = T.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : T.off[i - 1] * T.off[i - 1] / q;
    q = T.diag[i] - x - coupling;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

void check_shape(const SymTridiagonal& T, std::size_t k) {
  if (T.size() == 0) throw DomainError("empty tridiagonal matrix");
  if (T.off.size() + 1 != T.size()) throw DomainError("off-diagonal length must be n - 1");
  if (k > T.size()) throw DomainError("requested more eigenpairs than the matrix order");
}

std::pair<double, double> gershgorin(const SymTridiagonal& T) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = T.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(T.off[i - 1]);
    if (i + 1 < n) r += std::abs(T.off[i]);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  return {lo, hi};
}

// LU with partial pivoting of T - shift I (four-band U), then solve in place.
class ShiftedSolver {
 public:
  ShiftedSolver(const SymTridiagonal& T, double shift, double pivot_floor) {
    const std::size_t n = T.size();
    d_.assign(T.diag.begin(), T.diag.end());
    for (double& v : d_) v -= shift;
    du_.assign(n, 0.0);
    dl_.assign(n, 0.0);
    du2_.assign(n, 0.0);
    swap_.assign(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) du_[i] = T.off[i];
    std::vector<double> sub(T.off.begin(), T.off.end());
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(sub[i])) {
        if (d_[i] == 0.0) d_[i] = pivot_floor;
        const double f = sub[i] / d_[i];
        dl_[i] = f;
        d_[i + 1] -= f * du_[i];
      } else {
        swap_[i] = true;
        const double f = d_[i] / sub[i];
        d_[i] = sub[i];
        dl_[i] = f;
        const double tmp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = tmp - f * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -f * du_[i + 1];
        }
      }
    }
    for (double& v : d_) {
      if (std::abs(v) < pivot_floor) v = v < 0.0 ? -pivot_floor : pivot_floor;
    }
  }

  void solve(Eigen::VectorXd& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      if (swap_[i]) std::swap(b[ii], b[ii + 1]);
      b[ii + 1] -= dl_[i] * b[ii];
    }
    for (std::size_t r = n; r-- > 0;) {
      const auto ii = static_cast<Eigen::Index>(r);
      double acc = b[ii];
      if (r + 1 < n) acc -= du_[r] * b[ii + 1];
      if (r + 2 < n) acc -= du2_[r] * b[ii + 2];
      b[ii] = acc / d_[r];
    }
  }

 private:
  std::vector<double> d_, du_, du2_, dl_;
  std::vector<bool> swap_;
};

}  // namespace

std::vector<double> eigvals_tridiagonal(const SymTridiagonal& T, std::size_t k) {
  check_shape(T, k);
  auto [lo0, hi0] = gershgorin(T);
  const double scale = std::max(std::abs(lo0), std::abs(hi0));
  const double atol = 2.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);
  std::vector<double> values(k);
  double lower = lo0;
  for (std::size_t j = 0; j < k; ++j) {
    // Smallest x with count(x) > j, searched in [lower, hi0].
    double lo = lower;
    double hi = hi0;
    for (int it = 0; it < 200 && hi - lo > atol + 2.0 * std::numeric_limits<double>::epsilon() *
                                                        std::max(std::abs(lo), std::abs(hi));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(T, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[j] = 0.5 * (lo + hi);
    lower = lo;
  }
  return values;
}

std::vector<Eigenpair> eigs_tridiagonal(const SymTridiagonal& T, std::size_t k) {
  const std::vector<double> values = eigvals_tridiagonal(T, k);
  const std::size_t n = T.size();
  const double tnorm = std::max(T.norm_inf(), std::numeric_limits<double>::min());
  const double eps = std::numeric_limits<double>::epsilon();
  const double cluster_gap = 1e-3 * tnorm;
  std::vector<Eigenpair> pairs;
  pairs.reserve(k);

  std::size_t cluster_start = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (j > 0 && values[j] - values[j - 1] > cluster_gap) cluster_start = j;
    // Perturb shifts inside a cluster so each solve starts from a distinct pivot.
    const double shift = values[j] + static_cast<double>(j - cluster_start) * 10.0 * eps * tnorm;
    const ShiftedSolver solver(T, shift, eps * tnorm);

    Eigen::VectorXd x(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      // Deterministic, not orthogonal to any low mode in practice.
      x[static_cast<Eigen::Index>(i)] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + j);
    }
    x.normalize();
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
      solver.solve(x);
      for (std::size_t c = cluster_start; c < j; ++c) x -= pairs[c].vector.dot(x) * pairs[c].vector;
      x.normalize();
      residual = (T.apply(x) - values[j] * x).norm();
      if (it >= 1 && residual < 1e-10 * tnorm) break;
    }
    if (!(residual < 1e-10 * tnorm)) throw SolverError("inverse iteration did not converge", static_cast<int>(j));
    pairs.push_back({values[j], std::move(x)});
  }
  return pairs;
}

}  // namespace nlho
