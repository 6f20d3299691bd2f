#include "nlho/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlho/errors.hpp"
#include "nlho/tridiagonal.hpp"

namespace nlho {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol, int pieces) {
  if (!(b >= a)) throw DomainError("integration interval must satisfy a <= b");
  if (pieces < 1) throw DomainError("need at least one panel");
  QuadratureResult total{0.0, 0.0};
  const double width = (b - a) / pieces;
  for (int k = 0; k < pieces; ++k) {
    const double lo = a + k * width;
    const double hi = k + 1 == pieces ? b : lo + width;
    double err = 0.0;
    const double part =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, tol, &err);
    total.value += part;
    // Boost reports leaf errors in [-1, 1] units; the top-level half width
    // bounds the rescaling.
    total.error += err * 0.5 * (hi - lo);
  }
  return total;
}

GaussRule gauss_hermite(int order) {
  if (order < 1) throw DomainError("Gauss-Hermite order must be positive");
  SymTridiagonal J;
  J.diag.assign(static_cast<std::size_t>(order), 0.0);
  for (int k = 1; k < order; ++k) J.off.push_back(std::sqrt(0.5 * k));
  const auto pairs = eigs_tridiagonal(J, static_cast<std::size_t>(order));
  GaussRule rule;
  const double mu0 = std::sqrt(std::numbers::pi);
  for (const auto& p : pairs) {
    rule.nodes.push_back(p.value);
    rule.weights.push_back(mu0 * p.vector[0] * p.vector[0]);
  }
  return rule;
}

}  // namespace nlho
