#include "ellschub/expr.hpp"
#include "ellschub/expr_json.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

using namespace ellschub;
using testing::d;
using testing::h;
using testing::mono;
using testing::prod;

TEST_CASE("variable order") {
  const VarLess less;
  CHECK(less("z2", "z10"));
  CHECK(less("z9", "t.1.1"));
  CHECK(less("t.1.2", "t.2.1"));
  CHECK(less("t.2.1", "h"));
  CHECK(less("h", "mu"));
  CHECK(less("mu", "mu1"));
  CHECK(less("mu2", "mu10"));
  CHECK(less("mu3", "y1"));
  CHECK_FALSE(less("z1", "z1"));
}

TEST_CASE("monomial arithmetic and printing") {
  const auto m = mono({{"z2", 1}, {"z1", -1}});
  CHECK(m.to_string() == "z2/z1");
  CHECK((m * m.inverse()).is_one());
  CHECK(m.pow(2).to_string() == "z2^2/z1^2");
  CHECK(mono({{"mu2", 1}, {"h", -1}, {"mu1", -1}}).to_string() == "mu2/(h*mu1)");
  CHECK(mono({{"z1", -1}, {"z2", -1}}).to_string() == "1/(z1*z2)");
  CHECK(Monomial().to_string() == "1");
  CHECK(Monomial::var("h", Rational(1, 2)).to_string() == "h^(1/2)");
  CHECK(Monomial::character(IntVec{1, -1, 0}) == mono({{"z1", 1}, {"z2", -1}}));
  CHECK(mono({{"z2", 1}, {"z1", -1}}).to_latex() == "\\frac{z_{2}}{z_{1}}");
}

TEST_CASE("canonicalize merges, drops and orders") {
  const auto x = mono({{"z1", 1}, {"z2", -1}});
  const Expr a = prod({Factor::theta(x), Factor::theta(x), Factor::theta(x, -1)});
  CHECK(canonicalize(a) == Expr::factor(Factor::theta(x)));

  const Expr b = prod({d(x, h())}) + prod({d(h(), x)});
  CHECK(canonicalize(b) == prod({d(x, h())}) * Rational(2));

  CHECK(canonicalize(prod({d(x, h())}) - prod({d(h(), x)})).is_zero());
  CHECK(canonicalize(prod({Factor::theta(Monomial(), 1), d(x, h())})).is_zero());
  CHECK(canonicalize(Expr::constant(0)).is_zero());
  CHECK(canonicalize(Expr::one() + Expr::one()) == Expr::constant(2));
  // idempotent
  const Expr c = prod({d(x, h()), Factor::theta(x.inverse(), 2)}) + Expr::constant(Rational(1, 3));
  CHECK(canonicalize(canonicalize(c)) == canonicalize(c));
}

TEST_CASE("to_string forms") {
  const auto x = mono({{"z2", 1}, {"z1", -1}});
  CHECK(to_string(Expr::zero()) == "0");
  CHECK(to_string(Expr::one()) == "1");
  CHECK(to_string(prod({d(x, mono({{"mu2", 1}, {"mu1", -1}}))})) == "delta(z2/z1, mu2/mu1)");
  CHECK(Factor::theta(x, -1).to_string() == "theta(z2/z1)^-1");
  CHECK(Factor::theta_prime(2).to_string() == "theta'(1)^2");
}

TEST_CASE("substitution and z actions") {
  const auto x = mono({{"z2", 1}, {"z1", -1}});
  const Expr e = prod({d(x, mono({{"mu2", 1}, {"mu1", -1}}))});
  const Expr s = substitute(e, {{"mu1", Monomial()}, {"mu2", Monomial::var("mu")}});
  CHECK(to_string(s) == "delta(z2/z1, mu)");
  CHECK(to_string(swap_z(e, 1)) == "delta(z1/z2, mu2/mu1)");
  const WeylGroup g(RootSystem::build(Family::A, 1));
  CHECK(act_on_z(e, g.simple_reflection(1)) == swap_z(e, 1));
}

TEST_CASE("expand_to_theta and theta_normal_form agree numerically") {
  const EvalConfig cfg;
  const Expr e = prod({d(mono({{"z2", 1}, {"z1", -1}}), h()), d(mono({{"z1", -2}}), mono({{"mu", 1}}))}) +
                 prod({Factor::theta(mono({{"z1", -1}}), 3)});
  CHECK(numeric_equal(e, expand_to_theta(e), cfg).equal);
  CHECK(numeric_equal(e, theta_normal_form(e), cfg).equal);
  for (const auto& t : theta_normal_form(e).terms())
    for (const auto& f : t.factors) {
      if (f.kind != FactorKind::Theta) continue;
      REQUIRE_FALSE(f.arg1.exponents().empty());
      CHECK(f.arg1.exponents().begin()->second > 0);
    }
}

TEST_CASE("evaluation") {
  const EvalConfig cfg;
  PointAssignment pt;
  CHECK(eval_expr(Expr::one(), pt, cfg) == Complex(1.0, 0.0));
  CHECK(eval_expr(Expr::zero(), pt, cfg) == Complex(0.0, 0.0));
  pt.logs["z1"] = Complex(0.3, 0.1);
  pt.logs["h"] = Complex(-0.2, 0.4);
  const Expr e = prod({d(Monomial::var("z1"), h())});
  CHECK(std::abs(eval_expr(e, pt, cfg) - eval_delta(pt.logs["z1"], pt.logs["h"], cfg)) < 1e-15);
  CHECK_THROWS_AS(eval_expr(prod({d(Monomial::var("z2"), h())}), pt, cfg), DomainError);
  // a zero theta in a numerator gives 0, in a denominator a pole
  CHECK(eval_factor(Factor::theta(Monomial(), 2), pt, cfg) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(eval_factor(Factor::theta(Monomial(), -1), pt, cfg), PoleError);
}

TEST_CASE("delta at q = 0 at a stored point") {
  EvalConfig cfg;
  cfg.q = 0.0;
  PointAssignment pt;
  pt.logs["z1"] = Complex(0.25, 0.5);
  pt.logs["z2"] = Complex(-0.125, 0.25);
  pt.logs["h"] = Complex(0.375, -0.25);
  const Expr e = prod({d(mono({{"z1", 1}, {"z2", -1}}), h())});
  const Complex lx = pt.logs["z1"] - pt.logs["z2"];
  const Complex ly = pt.logs["h"];
  const Complex closed = std::sinh((lx + ly) / 2.0) / (2.0 * std::sinh(lx / 2.0) * std::sinh(ly / 2.0));
  CHECK(std::abs(eval_expr(e, pt, cfg) - closed) < 1e-15);
}

TEST_CASE("sampling is seeded and bounded") {
  const std::set<std::string, VarLess> vars{"z1", "z2", "h", "mu"};
  const auto a = default_point(vars, 7);
  const auto b = default_point(vars, 7);
  CHECK(a.logs == b.logs);
  CHECK(default_point(vars, 8).logs != a.logs);
  for (const auto& [v, l] : a.logs) {
    CHECK(std::abs(l.real()) <= 0.5);
    CHECK(std::abs(l.imag()) <= std::numbers::pi / 4);
  }
}

TEST_CASE("numeric_equal separates identities from non-identities") {
  const EvalConfig cfg;
  const auto x = mono({{"z1", 1}, {"z2", -1}});
  const auto y = mono({{"mu", 1}});
  // delta(x, y) = -delta(1/x, 1/y)
  CHECK(numeric_equal(prod({d(x, y)}), -prod({d(x.inverse(), y.inverse())}), cfg).equal);
  const auto wrong = numeric_equal(prod({d(x, y)}), prod({d(x.inverse(), y.inverse())}), cfg);
  CHECK_FALSE(wrong.equal);
  CHECK(wrong.max_deviation > 1.0);
  CHECK(wrong.samples == 20);
  // exact cancellation compared against zero
  const Expr cancel = prod({d(x, y)}) + prod({d(x.inverse(), y.inverse())});
  CHECK(numeric_equal(cancel, Expr::zero(), cfg).equal);
  CHECK_FALSE(numeric_equal(prod({d(x, y)}), Expr::zero(), cfg).equal);
}

TEST_CASE("relative deviation") {
  CHECK(relative_deviation({Complex(1, 0), 1.0}, {Complex(1, 0), 1.0}) == 0.0);
  CHECK(relative_deviation({Complex(2, 0), 2.0}, {Complex(1, 0), 1.0}) == doctest::Approx(0.5));
  CHECK(relative_deviation({Complex(0, 0), 0.0}, {Complex(0, 0), 0.0}) == 0.0);
  // both tiny next to their summands: the summands set the scale
  CHECK(relative_deviation({Complex(1e-17, 0), 1.0}, {Complex(0, 0), 0.0}) < 1e-9);
}

TEST_CASE("quadratic forms") {
  const auto x = mono({{"z1", 1}, {"z2", -1}});
  const auto qf = quadratic_form(d(x, h()));
  CHECK(qf.entry("z1", "h") == 1);
  CHECK(qf.entry("h", "z1") == 1);
  CHECK(qf.entry("z2", "h") == -1);
  CHECK(qf.entry("z1", "z1") == 0);
  CHECK(qf.is_symmetric());
  CHECK(quadratic_form(Factor::theta_prime(3)).entries().empty());
  // theta(x)^2 has the form of delta(x, x)
  CHECK(quadratic_form(Factor::theta(x, 2)) == quadratic_form(d(x, x)));

  CHECK(transformation_check(prod({d(x, h())}) + prod({d(x, h())})));
  CHECK_FALSE(transformation_check(prod({d(x, h())}) + prod({d(x.inverse(), h())}) + Expr::one()));
  // theta_normal_form does not change the forms
  const Expr e = prod({d(x, h()), d(x.inverse(), mono({{"mu", 1}}))});
  CHECK(transformation_check(theta_normal_form(e)));
}

TEST_CASE("json round trip") {
  const auto x = mono({{"z2", 1}, {"z1", -1}});
  const Expr e = canonicalize(prod({d(x, mono({{"mu", 1}, {"h", -1}}))}) * Rational(-3, 2) +
                              prod({Factor::theta(Monomial::var("z1", Rational(1, 2)), -2), Factor::theta_prime(1)}));
  CHECK(canonicalize(expr_from_json(to_json(e))) == e);
  CHECK(expr_from_json(nlohmann::json::parse(to_json(e).dump())) == expr_from_json(to_json(e)));
  CHECK(expr_from_json(nlohmann::json(1)) == Expr::one());
  CHECK(expr_from_json(nlohmann::json("2/3")) == Expr::constant(Rational(2, 3)));

  PointAssignment pt;
  pt.logs["z1"] = Complex(0.1, -0.2);
  CHECK(point_from_json(to_json(pt)).logs == pt.logs);
  CHECK(point_from_json(nlohmann::json::parse(R"({"h": 0.5})")).logs.at("h") == Complex(0.5, 0.0));
}

TEST_CASE("json parse errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"terms": 3})")), ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"terms": [{"factors": [{"kind": "gamma"}]}]})")), ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"terms": [{"factors": [{"kind": "delta", "arg1": {}}]}]})")),
                  ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"terms": [{"coeff": "1/0"}]})")), ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"terms": [{"factors": [{"kind": "theta", "arg": {"z1": 1}, "pow": 0}]}]})")),
                  ParseError);
  CHECK_THROWS_AS(point_from_json(json::parse(R"({"z1": [1]})")), ParseError);
  CHECK_THROWS_AS(point_from_json(json::parse("[1, 2]")), ParseError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("4") == 4);
  CHECK(format_rational(Rational(3, -6)) == "-1/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(Rational(2) == 2);
  CHECK(2 != Rational(1, 2));
}

TEST_CASE("spec examples for substitution, swaps and canonical forms") {
  const auto x = mono({{"z1", 1}, {"z2", -1}});
  const Expr e = prod({d(x, h())});
  CHECK(substitute(e, {}) == e);
  CHECK(substitute(e, {{"z1", Monomial::var("z1")}, {"h", h()}}) == e);
  CHECK(swap_z(swap_z(e, 1), 1) == e);
  CHECK(canonicalize(swap_z(e, 1)) == canonicalize(prod({d(x.inverse(), h())})));

  const auto a = d(x, h());
  const auto b = d(mono({{"z2", 2}}), mono({{"mu", 1}}));
  CHECK(canonicalize(prod({a, b})) == canonicalize(prod({b, a})));
  const Expr sum = canonicalize(e + e);
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms()[0].coeff == 2);

  const EvalConfig cfg;
  CHECK(numeric_equal(e, e, cfg).equal);
  CHECK_FALSE(numeric_equal(e, e * Rational(2), cfg).equal);
}

TEST_CASE("the SL2 recursion step as an identity") {
  // E(X_s)_1 = delta(e^{-a}, h^{<lambda, a^vee>}) E(X_1)_1 + delta(e^a, h) s[E(X_1)_s]
  const EvalConfig cfg;
  const Expr lhs = prod({d(mono({{"z2", 1}, {"z1", -1}}), mono({{"mu2", 1}, {"mu1", -1}}))});
  const Expr rhs = prod({d(mono({{"z1", -1}, {"z2", 1}}), mono({{"mu1", -1}, {"mu2", 1}}))}) * Expr::one() +
                   prod({d(mono({{"z1", 1}, {"z2", -1}}), h())}) * Expr::zero();
  CHECK(numeric_equal(lhs, rhs, cfg).equal);
}
