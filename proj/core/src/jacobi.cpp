#include "nlho/jacobi.hpp"

#include <cmath>

#include "nlho/errors.hpp"

namespace nlho {

namespace {

double monic_gap(int k, double a) {
  const double den = (2.0 * k + 2.0 * a - 1.0) * (2.0 * k + 2.0 * a - 3.0);
  if (den == 0.0) throw DomainError("symmetric Jacobi recurrence is singular at this parameter");
  return (k - 1.0) * (k - 1.0 + 2.0 * a) / den;
}

void require_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
}

using Poly = std::vector<double>;

Poly derivative(const Poly& c) {
  if (c.size() <= 1) return Poly{0.0};
  Poly d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return d;
}

double horner(const Poly& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void add_into(Poly& dst, const Poly& src, double scale, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0.0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k + shift] += scale * src[k];
}

}  // namespace

double JacobiPoly::operator()(double s) const { return horner(coeffs, s); }

double jacobi_leading(int n, double a) {
  require_degree(n);
  double lead = 1.0;
  for (int j = 1; j <= n; ++j) lead *= (2.0 * a + n + j) / (2.0 * j);
  return lead;
}

JacobiPoly make_jacobi_poly(int n, double a) {
  require_degree(n);
  Poly prev{1.0};
  Poly cur = n == 0 ? prev : Poly{0.0, 1.0};
  for (int k = 2; k <= n; ++k) {
    Poly next;
    add_into(next, cur, 1.0, 1);
    add_into(next, prev, monic_gap(k, a), 0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  const double lead = jacobi_leading(n, a);
  for (double& c : cur) c *= lead;
  // Opposite-parity slots are structurally zero; make them exactly so.
  for (std::size_t k = 0; k < cur.size(); ++k) {
    if (static_cast<int>(k % 2) != n % 2) cur[k] = 0.0;
  }
  return JacobiPoly{n, a, std::move(cur), n % 2};
}

double jacobi_monic_real(int n, double a, double s) {
  require_degree(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = s;
  for (int k = 2; k <= n; ++k) {
    const double next = s * cur + monic_gap(k, a) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_real(int n, double a, double s) {
  return jacobi_leading(n, a) * jacobi_monic_real(n, a, s);
}

double jacobi_monic_homogeneous(int n, double a, double t, double q2) {
  require_degree(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int k = 2; k <= n; ++k) {
    const double next = t * cur + monic_gap(k, a) * q2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

OriginJet jacobi_monic_at_origin(int n, double a) {
  require_degree(n);
  OriginJet prev{1.0, 0.0};
  if (n == 0) return prev;
  OriginJet cur{0.0, 1.0};
  for (int k = 2; k <= n; ++k) {
    const double g = monic_gap(k, a);
    const OriginJet next{g * prev.value, cur.value + g * prev.slope};
    prev = cur;
    cur = next;
  }
  return cur;
}

double rodrigues_eval(int n, double a, double x, double lambda) {
  require_degree(n);
  if (!(lambda > 0.0)) throw DomainError("Rodrigues evaluation needs lambda > 0");
  // d^k/dx^k (1 + lambda x^2)^mu = sum_j c_j(x) (1 + lambda x^2)^(mu - j).
  const double mu = a + n;
  std::vector<Poly> c{Poly{1.0}};
  for (int k = 0; k < n; ++k) {
    std::vector<Poly> next(c.size() + 1, Poly{0.0});
    for (std::size_t j = 0; j < c.size(); ++j) {
      add_into(next[j], derivative(c[j]), 1.0, 0);
      add_into(next[j + 1], c[j], 2.0 * lambda * (mu - static_cast<double>(j)), 1);
    }
    c = std::move(next);
  }
  // Multiply by w^(-a): w^(mu - j - a) = w^(n - j), an integer power.
  const double w = 1.0 + lambda * x * x;
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    sum += horner(c[j], x) * std::pow(w, n - static_cast<int>(j));
  }
  double scale = std::pow(lambda, 0.5 * n);
  for (int j = 1; j <= n; ++j) scale *= 2.0 * j;
  return sum / scale;
}

double hermite_limit(int n, double xi, double y) {
  require_degree(n);
  if (!(xi > 0.0)) throw DomainError("xi must be positive");
  const double r = jacobi_real(n, -xi, y / std::sqrt(xi));
  double scale = 1.0;
  for (int j = 1; j <= n; ++j) scale *= 2.0 * j;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * scale * r / std::pow(xi, 0.5 * n);
}

}  // namespace nlho
