#pragma once

// Symbolic sums of products of theta / delta factors over multiplicative
// characters with rational exponents.
//
// Variable namespace: "z1".."zn" (equivariant), "t.s.i" (weight-function
// variables t^{(s)}_i), "h", dynamical "mu" / "mu1".."mum", and "y1".."yn".

#include "ellschub/common.hpp"
#include "ellschub/lie.hpp"
#include "ellschub/theta.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ellschub {

/// Orders variables z < t < h < mu < y < other, numerically inside each family.
struct VarLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

std::string z_var(int i);
std::string t_var(int s, int i);
std::string mu_var(int s);
std::string y_var(int i);
inline const std::string kH = "h";

class Monomial {
 public:
  using Map = std::map<std::string, Rational, VarLess>;

  Monomial() = default;
  explicit Monomial(Map exps);
  static Monomial var(const std::string& name, Rational exponent = 1);
  /// e^beta = prod_k z_k^{beta_k}.
  static Monomial character(const IntVec& beta);
  static Monomial character(const std::vector<Rational>& beta);

  const Map& exponents() const { return exps_; }
  Rational exponent(const std::string& name) const;
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial inverse() const;
  Monomial pow(Rational e) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void set(const std::string& name, Rational e);
  Map exps_;
};

enum class FactorKind { Delta, Theta, ThetaPrime };

/// theta(arg1)^power, delta(arg1, arg2), or theta'(1)^power.
struct Factor {
  FactorKind kind = FactorKind::Theta;
  Monomial arg1;
  Monomial arg2;
  int power = 1;

  static Factor theta(Monomial arg, int power = 1);
  static Factor delta(Monomial x, Monomial y);
  static Factor theta_prime(int power = 1);

  bool operator==(const Factor& o) const;
  bool operator<(const Factor& o) const;
  std::string to_string() const;
  std::string to_latex() const;
};

struct Term {
  Rational coeff{1};
  std::vector<Factor> factors;

  bool operator==(const Term& o) const { return coeff == o.coeff && factors == o.factors; }
};

class Expr {
 public:
  Expr() = default;
  explicit Expr(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Expr zero() { return Expr(); }
  static Expr constant(Rational c);
  static Expr one() { return constant(1); }
  static Expr factor(Factor f);
  static Expr product(std::vector<Factor> fs, Rational coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Expr operator+(const Expr& o) const;
  Expr& operator+=(const Expr& o);
  Expr operator-(const Expr& o) const;
  Expr operator-() const;
  Expr operator*(const Expr& o) const;
  Expr operator*(const Rational& c) const;

  /// Structural equality; compare canonical forms for mathematical equality.
  bool operator==(const Expr& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

Expr substitute(const Expr& e, const std::map<std::string, Monomial>& map);
Monomial substitute(const Monomial& m, const std::map<std::string, Monomial>& map);

/// Exchanges z_i and z_{i+1} everywhere.
Expr swap_z(const Expr& e, int i);
/// e^beta -> e^{w beta} on the z-part of every monomial.
Expr act_on_z(const Expr& e, const WeylElement& w);

/// Sorted factors and terms, merged theta powers, identical terms combined,
/// zero terms (including any theta(1)^{p>0} factor) removed.
Expr canonicalize(const Expr& e);

/// delta(x,y) -> theta(xy) theta'(1) theta(x)^{-1} theta(y)^{-1}.
Expr expand_to_theta(const Expr& e);
/// expand_to_theta plus orientation theta(1/x) = -theta(x) so that each theta
/// argument has a positive leading exponent, then canonicalize.
Expr theta_normal_form(const Expr& e);

std::set<std::string, VarLess> variables(const Expr& e);

std::string to_string(const Expr& e);
std::string to_latex(const Expr& e);

// ---------------------------------------------------------------------------
// Numeric evaluation

struct PointAssignment {
  std::map<std::string, Complex, VarLess> logs;

  /// sum_v e_v log(v); throws DomainError on an unassigned variable.
  Complex log_of(const Monomial& m) const;
};

struct Evaluation {
  Complex value;
  /// sum over terms of |term value|: the scale against which cancellation is judged.
  double magnitude = 0.0;
};

Complex eval_factor(const Factor& f, const PointAssignment& pt, const EvalConfig& cfg);
Evaluation eval_detailed(const Expr& e, const PointAssignment& pt, const EvalConfig& cfg);
Complex eval_expr(const Expr& e, const PointAssignment& pt, const EvalConfig& cfg);

/// Logarithms with real part in [-0.5, 0.5] and imaginary part in [-pi/4, pi/4].
PointAssignment sample_point(const std::set<std::string, VarLess>& vars, std::mt19937_64& rng);

/// The point numeric_equal draws first for the given seed.
PointAssignment default_point(const std::set<std::string, VarLess>& vars, std::uint64_t seed);

struct NumericComparison {
  bool equal = false;
  double max_deviation = 0.0;
  int samples = 0;
  int redraws = 0;
};

/// Relative deviation of two evaluations. When both values are tiny compared to
/// the summand magnitudes (exact cancellation), the magnitudes set the scale.
double relative_deviation(const Evaluation& a, const Evaluation& b);

/// Identity test at n_samples random admissible points; equal iff every
/// deviation is below cfg.tolerance. Pole-hitting draws are redrawn.
NumericComparison numeric_equal(const Expr& a, const Expr& b, const EvalConfig& cfg, int n_samples = 20,
                                std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Transformation property

class QuadraticForm {
 public:
  using Key = std::pair<std::string, std::string>;

  /// Adds c to the (a,b) entry, and to (b,a) as well when a != b.
  void add(const std::string& a, const std::string& b, const Rational& c);
  QuadraticForm& operator+=(const QuadraticForm& o);

  Rational entry(const std::string& a, const std::string& b) const;
  const std::map<Key, Rational>& entries() const { return entries_; }
  bool is_symmetric() const;
  bool operator==(const QuadraticForm& o) const { return entries_ == o.entries_; }

  /// As a polynomial, e.g. "z1^2 + 2*z1*h".
  std::string to_string() const;

 private:
  std::map<Key, Rational> entries_;
};

/// theta(m)^p -> p L_m^2; delta(m1, m2) -> 2 L_1 L_2; theta'(1) -> 0.
QuadraticForm quadratic_form(const Term& t);
QuadraticForm quadratic_form(const Factor& f);

/// True iff all terms of the canonical form share one quadratic form.
bool transformation_check(const Expr& e);

}  // namespace ellschub
