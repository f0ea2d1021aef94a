#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsdirac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on a real argument (grid point, regime, coordinate) was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A Gamma-function argument sits on (or within tolerance of) a nonpositive integer.
class PoleError : public Error {
 public:
  PoleError(std::string argument, std::complex<double> value, const std::string& what)
      : Error(what), argument_(std::move(argument)), value_(value) {}

  const std::string& argument() const noexcept { return argument_; }
  std::complex<double> value() const noexcept { return value_; }

 private:
  std::string argument_;
  std::complex<double> value_;
};

// Parameters hit a case the formulas do not cover (integer c, vanishing coupling, ...).
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> partial_sum, std::size_t terms)
      : Error(what), partial_sum_(partial_sum), terms_(terms) {}

  std::complex<double> partial_sum() const noexcept { return partial_sum_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  std::complex<double> partial_sum_;
  std::size_t terms_;
};

// Quantum numbers outside the (k, j, m) lattice.
class LatticeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsdirac
