#include "nlho/params.hpp"

#include <cmath>
#include <limits>

#include "nlho/errors.hpp"

namespace nlho {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and positive");
  }
}

}  // namespace

void OscillatorParams::validate() const {
  require_positive(m, "mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("lambda must be finite and non-negative");
  }
}

double depth_index(double v) {
  if (std::isinf(v)) return v;
  // sqrt(1/4 + v) - 1/2 == v / (sqrt(1/4 + v) + 1/2), exact for small v.
  return v / (std::sqrt(0.25 + v) + 0.5);
}

DerivedParams derive(const OscillatorParams& params) {
  params.validate();
  DerivedParams d{};
  d.b2 = params.hbar / (params.m * params.omega);
  d.undeformed = params.undeformed();
  if (d.undeformed) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    d.v = inf;
    d.sigma = inf;
    d.xi = inf;
    d.epsilon_scale = inf;
    return d;
  }
  const double ratio = params.m * params.omega / (params.hbar * params.lambda);
  d.v = ratio * ratio;
  d.sigma = 0.5 + 0.5 * std::sqrt(0.25 + d.v);
  d.xi = 1.0 / (params.lambda * d.b2);
  d.epsilon_scale = 2.0 * params.m / (params.lambda * params.hbar * params.hbar);
  return d;
}

double x_to_X(double x, const OscillatorParams& params) {
  if (params.undeformed()) return x;
  const double r = std::sqrt(params.lambda);
  return std::asinh(r * x) / r;
}

double X_to_x(double X, const OscillatorParams& params) {
  if (params.undeformed()) return X;
  const double r = std::sqrt(params.lambda);
  return std::sinh(r * X) / r;
}

double p_to_P(double x, double p, const OscillatorParams& params) {
  return std::sqrt(1.0 + params.lambda * x * x) * p;
}

double P_to_p(double X, double P, const OscillatorParams& params) {
  if (params.undeformed()) return P;
  return P / std::cosh(std::sqrt(params.lambda) * X);
}

double log_cosh(double y) {
  const double a = std::fabs(y);
  if (a < 1.0) {
    const double s = std::sinh(a);
    return 0.5 * std::log1p(s * s);
  }
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace nlho
