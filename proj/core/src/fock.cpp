#include "nlho/fock.hpp"

#include <algorithm>
#include <cmath>

#include "nlho/errors.hpp"
#include "nlho/spectrum.hpp"

namespace nlho {

Ladder ladder_ops(int D) {
  if (D < 2) throw DomainError("Fock truncation needs D >= 2");
  Ladder l{{D, Eigen::MatrixXd::Zero(D, D), Band::super},
           {D, Eigen::MatrixXd::Zero(D, D), Band::sub},
           {D, Eigen::MatrixXd::Zero(D, D), Band::diagonal}};
  for (int n = 1; n < D; ++n) l.a.entries(n - 1, n) = std::sqrt(static_cast<double>(n));
  l.adag.entries = l.a.entries.transpose();
  for (int n = 0; n < D; ++n) l.nop.entries(n, n) = n;
  return l;
}

DeformedLadder deformed_ops(const OscillatorParams& params, int D) {
  if (D < 2) throw DomainError("Fock truncation needs D >= 2");
  params.validate();
  DeformedLadder out{{D, Eigen::MatrixXd::Zero(D, D), Band::super},
                     {D, Eigen::MatrixXd::Zero(D, D), Band::sub},
                     spectrum::f_cutoff(params),
                     false};
  out.truncated = D - 1 > out.cutoff;
  const int last = std::min(D - 1, out.cutoff);
  for (int n = 1; n <= last; ++n) {
    out.b.entries(n - 1, n) = std::sqrt(static_cast<double>(n)) * spectrum::f_deformation(n, params);
  }
  out.bdag.entries = out.b.entries.transpose();
  return out;
}

FockOperator hamiltonian_fock(const OscillatorParams& params, int D) {
  const DeformedLadder l = deformed_ops(params, D);
  const double half = 0.5 * params.hbar * params.omega;
  return {D, half * (l.b.entries * l.bdag.entries + l.bdag.entries * l.b.entries), Band::diagonal};
}

FockOperator commutator_bb(const OscillatorParams& params, int D) {
  const DeformedLadder l = deformed_ops(params, D);
  const double half = 0.5 * params.hbar * params.omega;
  return {D, half * (l.b.entries * l.bdag.entries - l.bdag.entries * l.b.entries), Band::diagonal};
}

DeformedCoherent coherent_type2(std::complex<double> beta, const OscillatorParams& params, int D) {
  if (D < 4) throw DomainError("type-2 coherent states need D >= 4");
  const DeformedLadder l = deformed_ops(params, D);
  DeformedCoherent out{beta, Eigen::VectorXcd::Zero(D), 0, 0.0, 0.0, 0.0};
  out.coeffs[0] = 1.0;
  int last = 0;
  for (int n = 0; n + 1 < D; ++n) {
    const double ladder = l.b.entries(n, n + 1);
    if (ladder == 0.0) break;  // f vanished: the eigenproblem is finite-dimensional
    out.coeffs[n + 1] = beta * out.coeffs[n] / ladder;
    last = n + 1;
  }
  out.coeffs /= out.coeffs.norm();
  out.cutoff = last;
  for (int n = std::max(0, D - 2); n < D; ++n) out.tail_mass += std::norm(out.coeffs[n]);
  const Eigen::MatrixXcd b = l.b.entries.cast<std::complex<double>>();
  out.residual = (b * out.coeffs - beta * out.coeffs).norm();
  out.bound = std::abs(beta) * std::abs(out.coeffs[last]);
  return out;
}

}  // namespace nlho
