#include "nlho/eigenfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nlho/errors.hpp"
#include "nlho/quadrature.hpp"
#include "nlho/spectrum.hpp"

namespace nlho {

double hermite_function(int n, double X, double b) {
  if (n < 0) throw DomainError("level index must be non-negative");
  const double u = X / b;
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  for (int k = 1; k <= n; ++k) {
    const double next = std::sqrt(2.0 / k) * u * cur - std::sqrt((k - 1.0) / k) * prev;
    prev = cur;
    cur = next;
  }
  // H_n(0) and H_n'(0) alternate in sign with n / 2.
  const int half = n / 2;
  const double sign = half % 2 == 0 ? 1.0 : -1.0;
  return sign * cur / std::sqrt(b);
}

double Eigenfunction::unnormalized(double X) const {
  const DerivedParams d = derive(params);
  if (d.undeformed) return hermite_function(n, X, std::sqrt(d.b2));
  const double y = std::sqrt(params.lambda) * X;
  const double t = std::tanh(y);
  const double c = std::cosh(y);
  const double q2 = std::isfinite(c) ? 1.0 / (c * c) : 0.0;
  const double rho = jacobi_monic_homogeneous(n, poly.a, t, q2);
  return std::exp((n - nu) * log_cosh(y)) * rho;
}

double Eigenfunction::evaluate(double X) const { return norm_const * unnormalized(X); }

double Eigenfunction::evaluate_x(double x) const { return evaluate(x_to_X(x, params)); }

namespace {

Eigenfunction bare(int n, const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  Eigenfunction phi;
  phi.n = n;
  phi.params = params;
  phi.energy = spectrum::energy_level(n, params);  // range check
  if (d.undeformed) {
    phi.nu = std::numeric_limits<double>::infinity();
    phi.poly = JacobiPoly{n, -std::numeric_limits<double>::infinity(), {}, n % 2};
    return phi;
  }
  phi.nu = depth_index(d.v);
  phi.poly = make_jacobi_poly(n, 1.0 - 2.0 * d.sigma);
  return phi;
}

double panel_width(const OscillatorParams& params) {
  const DerivedParams d = derive(params);
  const double b = std::sqrt(d.b2);
  return d.undeformed ? b : std::min(b, 1.0 / std::sqrt(params.lambda));
}

double turning_point(const Eigenfunction& phi) {
  const DerivedParams d = derive(phi.params);
  if (d.undeformed) return std::sqrt(d.b2 * (2.0 * phi.n + 1.0));
  const double ratio = phi.energy / spectrum::continuum_threshold(phi.params);
  return std::atanh(std::sqrt(std::min(ratio, 1.0 - 1e-16))) / std::sqrt(phi.params.lambda);
}

int sign_convention(const Eigenfunction& phi) {
  const DerivedParams d = derive(phi.params);
  if (d.undeformed) return 1;
  const OriginJet jet = jacobi_monic_at_origin(phi.n, phi.poly.a);
  const double lead = phi.n % 2 == 0 ? jet.value : jet.slope;
  return lead < 0.0 ? -1 : 1;
}

double integrate_symmetric(const std::function<double(double)>& f, double radius, double width,
                           double tol, double* error) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(radius / width)));
  const QuadratureResult r = integrate_adaptive(f, 0.0, radius, tol, pieces);
  *error = 2.0 * r.error;
  return 2.0 * r.value;
}

}  // namespace

double support_radius(const Eigenfunction& phi) {
  const double step = panel_width(phi.params) / 8.0;
  const double xt = turning_point(phi);
  double peak = 0.0;
  double X = 0.0;
  for (long k = 0; k < 100000000L; ++k, X += step) {
    const double g = phi.unnormalized(X);
    const double g2 = g * g;
    peak = std::max(peak, g2);
    if (X > xt && g2 < 1e-18 * peak) return X;
  }
  throw QuadratureError("eigenfunction tail does not decay", X, 0.0);
}

double normalize(int n, const OscillatorParams& params, double tol) {
  Eigenfunction phi = bare(n, params);
  const double radius = support_radius(phi);
  double error = 0.0;
  const double mass = integrate_symmetric(
      [&](double X) {
        const double g = phi.unnormalized(X);
        return g * g;
      },
      radius, panel_width(params), tol, &error);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw QuadratureError("norm integral is not positive and finite", mass, error);
  }
  if (error > tol * mass) throw QuadratureError("norm integral did not reach tolerance", mass, error);
  return sign_convention(phi) / std::sqrt(mass);
}

Eigenfunction eigenfunction(int n, const OscillatorParams& params, double tol) {
  Eigenfunction phi = bare(n, params);
  phi.norm_const = normalize(n, params, tol);
  return phi;
}

double overlap(const Eigenfunction& a, const Eigenfunction& b, double tol) {
  const double radius = std::max(support_radius(a), support_radius(b));
  const double width = std::min(panel_width(a.params), panel_width(b.params));
  const int pieces = std::max(2, 2 * static_cast<int>(std::ceil(radius / width)));
  // Polarization keeps both integrands positive, so a relative tolerance
  // still means something when the overlap itself is zero.
  const auto sum = integrate_adaptive(
      [&](double X) {
        const double g = a.evaluate(X) + b.evaluate(X);
        return g * g;
      },
      -radius, radius, tol, pieces);
  const auto diff = integrate_adaptive(
      [&](double X) {
        const double g = a.evaluate(X) - b.evaluate(X);
        return g * g;
      },
      -radius, radius, tol, pieces);
  return 0.25 * (sum.value - diff.value);
}

std::vector<EigenstateRow> eigenstate_table(const OscillatorParams& params, double tol) {
  if (params.undeformed()) throw DomainError("eigenstate table needs lambda > 0");
  const int count = spectrum::bound_state_count(params);
  std::vector<EigenstateRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    const Eigenfunction phi = eigenfunction(n, params, tol);
    rows.push_back({n, phi.energy, phi.norm_const, phi.poly.coeffs});
  }
  return rows;
}

}  // namespace nlho
