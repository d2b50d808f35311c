#include "ellschub/expr_json.hpp"

namespace ellschub {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return format_rational(r);
}

Rational rational_from(const json& j, const char* what) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
      throw ParseError(std::string(what) + " out of range");
    return Rational(static_cast<int>(v));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(std::string(what) + " must be an integer or a \"p/q\" string");
}

int power_from(const json& j) {
  if (!j.contains("pow")) return 1;
  const Rational p = rational_from(j.at("pow"), "pow");
  if (p.denominator() != 1 || p == 0) throw ParseError("pow must be a nonzero integer");
  return p.numerator();
}

}  // namespace

json to_json(const Monomial& m) {
  json j = json::object();
  for (const auto& [v, e] : m.exponents()) j[v] = rational_json(e);
  return j;
}

json to_json(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Delta: return {{"kind", "delta"}, {"arg1", to_json(f.arg1)}, {"arg2", to_json(f.arg2)}};
    case FactorKind::Theta: return {{"kind", "theta"}, {"pow", f.power}, {"arg", to_json(f.arg1)}};
    case FactorKind::ThetaPrime: return {{"kind", "thetaprime"}, {"pow", f.power}};
  }
  return nullptr;
}

json to_json(const Expr& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json fs = json::array();
    for (const auto& f : t.factors) fs.push_back(to_json(f));
    terms.push_back({{"coeff", format_rational(t.coeff)}, {"factors", fs}});
  }
  return {{"terms", terms}};
}

json to_json(const PointAssignment& pt) {
  json j = json::object();
  for (const auto& [v, l] : pt.logs) j[v] = {l.real(), l.imag()};
  return j;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("monomial must be an object of exponents");
  Monomial m;
  for (const auto& [v, e] : j.items()) m *= Monomial::var(v, rational_from(e, "exponent"));
  return m;
}

Factor factor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("factor needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "delta") {
    if (!j.contains("arg1") || !j.contains("arg2")) throw ParseError("delta needs arg1 and arg2");
    return Factor::delta(monomial_from_json(j.at("arg1")), monomial_from_json(j.at("arg2")));
  }
  if (kind == "theta") {
    if (!j.contains("arg")) throw ParseError("theta needs arg");
    return Factor::theta(monomial_from_json(j.at("arg")), power_from(j));
  }
  if (kind == "thetaprime") return Factor::theta_prime(power_from(j));
  throw ParseError("unknown factor kind '" + kind + "'");
}

Expr expr_from_json(const json& j) {
  try {
    if (j.is_number_integer() || j.is_string()) return Expr::constant(rational_from(j, "constant"));
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
      throw ParseError("expression must be an object with a \"terms\" array");
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      Term term;
      term.coeff = t.contains("coeff") ? rational_from(t.at("coeff"), "coeff") : Rational(1);
      if (t.contains("factors")) {
        if (!t.at("factors").is_array()) throw ParseError("factors must be an array");
        for (const auto& f : t.at("factors")) term.factors.push_back(factor_from_json(f));
      }
      terms.push_back(std::move(term));
    }
    return Expr(std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed expression: ") + e.what());
  }
}

PointAssignment point_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("point must be an object mapping variables to [re, im]");
  PointAssignment pt;
  for (const auto& [v, l] : j.items()) {
    if (l.is_number()) {
      pt.logs[v] = Complex(l.get<double>(), 0.0);
    } else if (l.is_array() && l.size() == 2 && l[0].is_number() && l[1].is_number()) {
      pt.logs[v] = Complex(l[0].get<double>(), l[1].get<double>());
    } else {
      throw ParseError("point value for '" + v + "' must be [re, im]");
    }
  }
  return pt;
}

}  // namespace ellschub
