#include "ellschub/theta.hpp"

#include "ellschub/common.hpp"

#include <cmath>

namespace ellschub {

void EvalConfig::validate() const {
  if (!(std::abs(q) < 1.0)) throw ConfigError("EvalConfig: |q| must be < 1");
  if (truncation < 1) throw ConfigError("EvalConfig: truncation order must be >= 1");
  if (!(tolerance > 0.0)) throw ConfigError("EvalConfig: tolerance must be positive");
}

Complex eval_theta(Complex log_x, const EvalConfig& cfg) {
  const Complex x = std::exp(log_x);
  const Complex inv = std::exp(-log_x);
  Complex value = std::exp(0.5 * log_x) - std::exp(-0.5 * log_x);
  Complex qn = 1.0;
  for (int n = 1; n <= cfg.truncation; ++n) {
    qn *= cfg.q;
    value *= (1.0 - qn * x) * (1.0 - qn * inv);
  }
  return value;
}

Complex theta_prime_one(const EvalConfig& cfg) {
  Complex value = 1.0;
  Complex qn = 1.0;
  for (int n = 1; n <= cfg.truncation; ++n) {
    qn *= cfg.q;
    value *= (1.0 - qn) * (1.0 - qn);
  }
  return value;
}

Complex eval_delta(Complex log_x, Complex log_y, const EvalConfig& cfg) {
  const Complex tx = eval_theta(log_x, cfg);
  if (std::abs(tx) < cfg.tolerance) throw PoleError("delta: theta(x) vanishes", "arg1");
  const Complex ty = eval_theta(log_y, cfg);
  if (std::abs(ty) < cfg.tolerance) throw PoleError("delta: theta(y) vanishes", "arg2");
  return eval_theta(log_x + log_y, cfg) * theta_prime_one(cfg) / (tx * ty);
}

}  // namespace ellschub
