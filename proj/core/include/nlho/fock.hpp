#pragma once

// Truncated number basis {|0>, ..., |D-1>} and the f-deformed ladder b = a f(n).

#include <complex>

#include <Eigen/Dense>

#include "nlho/params.hpp"

namespace nlho {

enum class Band { diagonal, sub, super, full };

struct FockOperator {
  int dim = 0;
  Eigen::MatrixXd entries;
  Band band = Band::full;
};

struct Ladder {
  FockOperator a;
  FockOperator adag;
  FockOperator nop;
};

/// Standard a, a^dagger, n. Throws DomainError for D < 2.
Ladder ladder_ops(int D);

struct DeformedLadder {
  FockOperator b;
  FockOperator bdag;
  /// Last index with f(n)^2 >= 0 (kUnbounded when undeformed).
  int cutoff;
  /// True when D - 1 exceeds the cutoff; entries past it are zero.
  bool truncated;
};

/// b|n> = sqrt(n) f(n) |n-1>.
DeformedLadder deformed_ops(const OscillatorParams& params, int D);

/// (hbar omega / 2)(b b^dagger + b^dagger b).
FockOperator hamiltonian_fock(const OscillatorParams& params, int D);
/// (hbar omega / 2)[b, b^dagger].
FockOperator commutator_bb(const OscillatorParams& params, int D);

struct DeformedCoherent {
  std::complex<double> beta;
  Eigen::VectorXcd coeffs;  ///< unit norm, c_0 real positive
  int cutoff;               ///< last populated index
  double tail_mass;         ///< sum_{n >= D-2} |c_n|^2
  double residual;          ///< ||(b - beta) c||
  double bound;             ///< |beta| |c_cutoff|
};

/// c_{n+1} = beta c_n / (sqrt(n+1) f(n+1)), stopped at the deformation cutoff
/// or D - 1. Throws DomainError for D < 4.
DeformedCoherent coherent_type2(std::complex<double> beta, const OscillatorParams& params, int D);

}  // namespace nlho
