#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hgc {

// config: malformed input (CLI exit 2); numerical: refusal by a genericity,
// regime or convergence guard (CLI exit 3).
enum class ErrorKind { config, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error config_error(const std::string& what) {
  return Error(ErrorKind::config, what);
}

inline Error numerical_error(const std::string& what) {
  return Error(ErrorKind::numerical, what);
}

// Raised when a series or quadrature runs out of budget. Carries the best
// value reached so callers can still inspect it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> partial,
                   double tail)
      : Error(ErrorKind::numerical, what), partial_(partial), tail_(tail) {}
  std::complex<double> partial() const noexcept { return partial_; }
  double tail() const noexcept { return tail_; }

 private:
  std::complex<double> partial_;
  double tail_;
};

}  // namespace hgc
