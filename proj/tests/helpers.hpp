#pragma once

#include "ellschub/expr.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace testing {

inline ellschub::Monomial mono(std::initializer_list<std::pair<std::string, int>> exps) {
  ellschub::Monomial m;
  for (const auto& [v, e] : exps) m *= ellschub::Monomial::var(v, e);
  return m;
}

inline ellschub::Factor d(ellschub::Monomial x, ellschub::Monomial y) { return ellschub::Factor::delta(x, y); }

inline ellschub::Expr prod(std::initializer_list<ellschub::Factor> fs) { return ellschub::Expr::product(fs); }

inline ellschub::Monomial h() { return ellschub::Monomial::var("h"); }

}  // namespace testing
