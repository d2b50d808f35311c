#pragma once

// Truncated q-product evaluation of
//   theta(x) = (x^{1/2} - x^{-1/2}) prod_{n>=1} (1 - q^n x)(1 - q^n / x)
// and of delta(x, y) = theta(xy) theta'(1) / (theta(x) theta(y)).
//
// Every argument is passed as a logarithm, so x^{1/2} is exp(log_x / 2) and
// products of several factors never meet a branch cut.

#include <complex>
#include <stdexcept>
#include <string>

namespace ellschub {

using Complex = std::complex<double>;

struct EvalConfig {
  Complex q{0.1, 0.0};
  int truncation = 40;
  double tolerance = 1e-9;

  /// Throws ConfigError unless |q| < 1, truncation >= 1 and tolerance > 0.
  void validate() const;
};

/// A theta factor vanished where it sits in a denominator.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, std::string where) : std::runtime_error(what), where_(std::move(where)) {}
  /// Which argument or factor degenerated.
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Complex eval_theta(Complex log_x, const EvalConfig& cfg);

/// theta'(1) = prod_{n=1}^{N} (1 - q^n)^2.
Complex theta_prime_one(const EvalConfig& cfg);

/// Throws PoleError (where() = "arg1" or "arg2") if |theta(x)| or |theta(y)| < tolerance.
Complex eval_delta(Complex log_x, Complex log_y, const EvalConfig& cfg);

}  // namespace ellschub
