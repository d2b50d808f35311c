#pragma once

// JSON forms of expressions and evaluation points.
//
//   {"terms": [{"coeff": "p/q",
//               "factors": [{"kind": "delta", "arg1": {"z1": 1, "z2": -1}, "arg2": {"h": 1}},
//                           {"kind": "theta", "pow": -1, "arg": {"h": "1/2"}},
//                           {"kind": "thetaprime", "pow": 2}]}]}
//
// Exponents and coefficients are integers or "p/q" strings. A point maps each
// variable to the logarithm [re, im] of its value.

#include "ellschub/expr.hpp"

#include "json.hpp"

namespace ellschub {

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const Factor& f);
nlohmann::json to_json(const Expr& e);
nlohmann::json to_json(const PointAssignment& pt);

/// All parsers throw ParseError on malformed input.
Monomial monomial_from_json(const nlohmann::json& j);
Factor factor_from_json(const nlohmann::json& j);
Expr expr_from_json(const nlohmann::json& j);
PointAssignment point_from_json(const nlohmann::json& j);

}  // namespace ellschub
