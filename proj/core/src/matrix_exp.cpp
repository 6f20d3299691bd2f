#include "nlho/matrix_exp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nlho/errors.hpp"

namespace nlho {

double norm1(const Eigen::MatrixXcd& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

double norm1(const SparseComplex& A) {
  Eigen::VectorXd cols = Eigen::VectorXd::Zero(A.cols());
  for (Eigen::Index r = 0; r < A.outerSize(); ++r) {
    for (SparseComplex::InnerIterator it(A, r); it; ++it) cols[it.col()] += std::abs(it.value());
  }
  return cols.size() == 0 ? 0.0 : cols.maxCoeff();
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A) {
  if (A.rows() != A.cols()) throw DomainError("expm needs a square matrix");
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const double nrm = norm1(A);
  if (!std::isfinite(nrm)) throw RangeError("matrix exponential of a non-finite matrix");
  // e^||A|| bounds the result; past ~700 doubles overflow.
  if (nrm > 700.0) throw RangeError("matrix exponent norm too large; reduce lambda L^2");
  int s = 0;
  if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  const Eigen::MatrixXcd As = A / std::ldexp(1.0, s);

  const auto n = A.rows();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd A2 = As * As;
  const Eigen::MatrixXcd A4 = A2 * A2;
  const Eigen::MatrixXcd A6 = A4 * A2;
  const Eigen::MatrixXcd U =
      As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  const Eigen::MatrixXcd V =
      A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  Eigen::MatrixXcd R = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) R = R * R;
  if (!R.allFinite()) throw RangeError("matrix exponential overflowed");
  return R;
}

Eigen::VectorXcd expm_action(const SparseComplex& A, const Eigen::VectorXcd& v, double t,
                             double tol) {
  if (A.rows() != A.cols() || A.cols() != v.size()) throw DomainError("expm_action shape mismatch");
  const double nrm = norm1(A) * std::abs(t);
  if (!std::isfinite(nrm)) throw RangeError("exponential action of a non-finite operator");
  // Each substep has ||tau A|| <= 1, so the Taylor terms fall off factorially.
  const int steps = std::max(1, static_cast<int>(std::ceil(nrm)));
  const double tau = t / steps;
  Eigen::VectorXcd f = v;
  for (int k = 0; k < steps; ++k) {
    Eigen::VectorXcd term = f;
    Eigen::VectorXcd acc = f;
    const double scale = f.norm();
    for (int j = 1; j <= 60; ++j) {
      term = (tau / j) * (A * term);
      acc += term;
      if (term.norm() <= tol * scale) break;
    }
    f = std::move(acc);
    if (!f.allFinite()) throw RangeError("exponential action overflowed");
  }
  return f;
}

}  // namespace nlho
