#pragma once

#include <functional>
#include <vector>

namespace nlho {

struct QuadratureResult {
  double value;
  double error;  ///< absolute error estimate
};

/// Adaptive 15/31-point Gauss-Kronrod over
/// [a, b] split into `pieces` equal panels, each refined to relative `tol`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol, int pieces = 1);

/// Nodes and weights for the integral of exp(-t^2) g(t) over the real line,
/// by Golub-Welsch on the Hermite Jacobi matrix (off-diagonal sqrt(k/2)).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_hermite(int order);

}  // namespace nlho
