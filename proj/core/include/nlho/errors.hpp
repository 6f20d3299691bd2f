#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlho {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical input (non-finite, non-positive, outside a formula's domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested level index lies above the last bound state.
class OutOfSpectrumError : public Error {
 public:
  OutOfSpectrumError(int n, int n_max)
      : Error("level " + std::to_string(n) + " is above the last bound level " +
              std::to_string(n_max)),
        n_(n),
        n_max_(n_max) {}
  int level() const noexcept { return n_; }
  int max_level() const noexcept { return n_max_; }

 private:
  int n_;
  int n_max_;
};

/// f(n)^2 went negative; the deformed algebra is finite below `cutoff`.
class TruncationError : public Error {
 public:
  TruncationError(int n, int cutoff)
      : Error("deformation function undefined at n=" + std::to_string(n) +
              " (last valid index " + std::to_string(cutoff) + ")"),
        cutoff_(cutoff) {}
  int cutoff() const noexcept { return cutoff_; }

 private:
  int cutoff_;
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, std::size_t step)
      : Error(what + " at step " + std::to_string(step)), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, int index)
      : Error(what + " (eigenpair " + std::to_string(index) + ")"), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Matrix exponential argument too large for double range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class PropagationError : public Error {
 public:
  PropagationError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace nlho
