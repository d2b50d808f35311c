#include "ellschub/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

namespace ellschub {

namespace {

struct VarKey {
  int family;
  long major;
  long minor;
};

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

VarKey var_key(const std::string& v) {
  if (v.size() > 1 && v[0] == 'z' && all_digits(v.substr(1))) return {0, std::stol(v.substr(1)), 0};
  if (v.size() > 2 && v.rfind("t.", 0) == 0) {
    const auto dot2 = v.find('.', 2);
    if (dot2 != std::string::npos && all_digits(v.substr(2, dot2 - 2)) && all_digits(v.substr(dot2 + 1)))
      return {1, std::stol(v.substr(2, dot2 - 2)), std::stol(v.substr(dot2 + 1))};
  }
  if (v == "h") return {2, 0, 0};
  if (v == "mu") return {3, 0, 0};
  if (v.size() > 2 && v.rfind("mu", 0) == 0 && all_digits(v.substr(2))) return {3, std::stol(v.substr(2)), 0};
  if (v.size() > 1 && v[0] == 'y' && all_digits(v.substr(1))) return {4, std::stol(v.substr(1)), 0};
  return {5, 0, 0};
}

std::string var_latex(const std::string& v) {
  const auto k = var_key(v);
  switch (k.family) {
    case 0: return "z_{" + std::to_string(k.major) + "}";
    case 1: return "t^{(" + std::to_string(k.major) + ")}_{" + std::to_string(k.minor) + "}";
    case 2: return "h";
    case 3: return k.major == 0 ? std::string("\\mu") : "\\mu_{" + std::to_string(k.major) + "}";
    case 4: return "y_{" + std::to_string(k.major) + "}";
    default: return v;
  }
}

std::string power_suffix(const Rational& e) {
  if (e == 1) return "";
  if (e.denominator() == 1) return "^" + std::to_string(e.numerator());
  return "^(" + format_rational(e) + ")";
}

std::string join_vars(const std::vector<std::pair<std::string, Rational>>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i].first + power_suffix(parts[i].second);
  return s;
}

constexpr double kCancellationFloor = 1e-6;

}  // namespace

bool VarLess::operator()(const std::string& a, const std::string& b) const {
  const auto ka = var_key(a);
  const auto kb = var_key(b);
  return std::tie(ka.family, ka.major, ka.minor, a) < std::tie(kb.family, kb.major, kb.minor, b);
}

std::string z_var(int i) { return "z" + std::to_string(i); }
std::string t_var(int s, int i) { return "t." + std::to_string(s) + "." + std::to_string(i); }
std::string mu_var(int s) { return "mu" + std::to_string(s); }
std::string y_var(int i) { return "y" + std::to_string(i); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Map exps) {
  for (auto& [v, e] : exps)
    if (e != 0) exps_.emplace(v, e);
}

Monomial Monomial::var(const std::string& name, Rational exponent) {
  Monomial m;
  m.set(name, exponent);
  return m;
}

Monomial Monomial::character(const IntVec& beta) {
  Monomial m;
  for (std::size_t k = 0; k < beta.size(); ++k) m.set(z_var(static_cast<int>(k) + 1), beta[k]);
  return m;
}

Monomial Monomial::character(const std::vector<Rational>& beta) {
  Monomial m;
  for (std::size_t k = 0; k < beta.size(); ++k) m.set(z_var(static_cast<int>(k) + 1), beta[k]);
  return m;
}

void Monomial::set(const std::string& name, Rational e) {
  if (e == 0) {
    exps_.erase(name);
  } else {
    exps_[name] = e;
  }
}

Rational Monomial::exponent(const std::string& name) const {
  const auto it = exps_.find(name);
  return it == exps_.end() ? Rational(0) : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [v, e] : o.exps_) set(v, exponent(v) + e);
  return *this;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(Rational e) const {
  Monomial r;
  if (e == 0) return r;
  for (const auto& [v, x] : exps_) r.exps_.emplace(v, x * e);
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  return std::lexicographical_compare(exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end(),
                                      [](const auto& a, const auto& b) {
                                        if (a.first != b.first) return VarLess{}(a.first, b.first);
                                        return a.second < b.second;
                                      });
}

std::string Monomial::to_string() const {
  std::vector<std::pair<std::string, Rational>> num;
  std::vector<std::pair<std::string, Rational>> den;
  for (const auto& [v, e] : exps_) (e > 0 ? num : den).emplace_back(v, e > 0 ? e : -e);
  std::string s = num.empty() ? "1" : join_vars(num);
  if (den.empty()) return s;
  const std::string d = join_vars(den);
  return s + "/" + (den.size() > 1 ? "(" + d + ")" : d);
}

std::string Monomial::to_latex() const {
  auto render = [](const std::vector<std::pair<std::string, Rational>>& parts) {
    std::string s;
    for (const auto& [v, e] : parts) {
      s += var_latex(v);
      if (e != 1) s += "^{" + format_rational(e) + "}";
    }
    return s;
  };
  std::vector<std::pair<std::string, Rational>> num;
  std::vector<std::pair<std::string, Rational>> den;
  for (const auto& [v, e] : exps_) (e > 0 ? num : den).emplace_back(v, e > 0 ? e : -e);
  const std::string n = num.empty() ? "1" : render(num);
  if (den.empty()) return n;
  return "\\frac{" + n + "}{" + render(den) + "}";
}

// ---------------------------------------------------------------------------
// Factor

Factor Factor::theta(Monomial arg, int power) {
  Factor f;
  f.kind = FactorKind::Theta;
  f.arg1 = std::move(arg);
  f.power = power;
  return f;
}

Factor Factor::delta(Monomial x, Monomial y) {
  Factor f;
  f.kind = FactorKind::Delta;
  f.arg1 = std::move(x);
  f.arg2 = std::move(y);
  f.power = 1;
  return f;
}

Factor Factor::theta_prime(int power) {
  Factor f;
  f.kind = FactorKind::ThetaPrime;
  f.power = power;
  return f;
}

bool Factor::operator==(const Factor& o) const {
  return kind == o.kind && arg1 == o.arg1 && arg2 == o.arg2 && power == o.power;
}

bool Factor::operator<(const Factor& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (arg1 != o.arg1) return arg1 < o.arg1;
  if (arg2 != o.arg2) return arg2 < o.arg2;
  return power < o.power;
}

std::string Factor::to_string() const {
  switch (kind) {
    case FactorKind::Delta: return "delta(" + arg1.to_string() + ", " + arg2.to_string() + ")";
    case FactorKind::Theta: return "theta(" + arg1.to_string() + ")" + (power == 1 ? "" : "^" + std::to_string(power));
    case FactorKind::ThetaPrime: return "theta'(1)" + (power == 1 ? std::string() : "^" + std::to_string(power));
  }
  return "?";
}

std::string Factor::to_latex() const {
  const auto pw = [this] { return power == 1 ? std::string() : "^{" + std::to_string(power) + "}"; };
  switch (kind) {
    case FactorKind::Delta: return "\\delta\\left(" + arg1.to_latex() + "," + arg2.to_latex() + "\\right)";
    case FactorKind::Theta: return "\\vartheta\\left(" + arg1.to_latex() + "\\right)" + pw();
    case FactorKind::ThetaPrime: return "\\vartheta'(1)" + pw();
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Expr

Expr Expr::constant(Rational c) {
  if (c == 0) return Expr();
  return Expr({Term{c, {}}});
}

Expr Expr::factor(Factor f) { return Expr({Term{1, {std::move(f)}}}); }

Expr Expr::product(std::vector<Factor> fs, Rational coeff) {
  if (coeff == 0) return Expr();
  return Expr({Term{coeff, std::move(fs)}});
}

Expr Expr::operator+(const Expr& o) const {
  Expr r = *this;
  r += o;
  return r;
}

Expr& Expr::operator+=(const Expr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Expr Expr::operator-() const { return *this * Rational(-1); }

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Term t{a.coeff * b.coeff, a.factors};
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      out.push_back(std::move(t));
    }
  return Expr(std::move(out));
}

Expr Expr::operator*(const Rational& c) const {
  if (c == 0) return Expr();
  Expr r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Monomial substitute(const Monomial& m, const std::map<std::string, Monomial>& map) {
  Monomial out;
  for (const auto& [v, e] : m.exponents()) {
    const auto it = map.find(v);
    out *= it == map.end() ? Monomial::var(v, e) : it->second.pow(e);
  }
  return out;
}

namespace {

template <typename MonoFn>
Expr map_monomials(const Expr& e, MonoFn&& fn) {
  std::vector<Term> out;
  out.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    Term nt{t.coeff, {}};
    nt.factors.reserve(t.factors.size());
    for (const auto& f : t.factors) {
      Factor g = f;
      if (f.kind != FactorKind::ThetaPrime) g.arg1 = fn(f.arg1);
      if (f.kind == FactorKind::Delta) g.arg2 = fn(f.arg2);
      nt.factors.push_back(std::move(g));
    }
    out.push_back(std::move(nt));
  }
  return Expr(std::move(out));
}

}  // namespace

Expr substitute(const Expr& e, const std::map<std::string, Monomial>& map) {
  return map_monomials(e, [&map](const Monomial& m) { return substitute(m, map); });
}

Expr swap_z(const Expr& e, int i) {
  if (i < 1) throw DomainError("swap_z: index must be >= 1");
  const std::map<std::string, Monomial> map{{z_var(i), Monomial::var(z_var(i + 1))},
                                            {z_var(i + 1), Monomial::var(z_var(i))}};
  return substitute(e, map);
}

Expr act_on_z(const Expr& e, const WeylElement& w) {
  const int dim = w.dim();
  return map_monomials(e, [&](const Monomial& m) {
    std::vector<Rational> beta(static_cast<std::size_t>(dim));
    Monomial rest;
    for (const auto& [v, x] : m.exponents()) {
      const auto k = var_key(v);
      if (k.family == 0) {
        if (k.major < 1 || k.major > dim) throw DomainError("act_on_z: variable " + v + " outside the torus");
        beta[static_cast<std::size_t>(k.major - 1)] = x;
      } else {
        rest *= Monomial::var(v, x);
      }
    }
    return Monomial::character(w.act(beta)) * rest;
  });
}

namespace {

// Canonical form of one term; coeff 0 marks a vanishing term.
Term canonical_term(const Term& t) {
  std::map<Monomial, int> theta_pows;
  int prime = 0;
  std::vector<Factor> deltas;
  for (const auto& f : t.factors) {
    switch (f.kind) {
      case FactorKind::Theta: theta_pows[f.arg1] += f.power; break;
      case FactorKind::ThetaPrime: prime += f.power; break;
      case FactorKind::Delta: {
        Factor d = f;
        if (d.arg2 < d.arg1) std::swap(d.arg1, d.arg2);
        deltas.push_back(std::move(d));
        break;
      }
    }
  }
  const auto unit = theta_pows.find(Monomial());
  if (unit != theta_pows.end() && unit->second > 0) return Term{0, {}};
  Term out{t.coeff, std::move(deltas)};
  for (const auto& [arg, p] : theta_pows)
    if (p != 0) out.factors.push_back(Factor::theta(arg, p));
  if (prime != 0) out.factors.push_back(Factor::theta_prime(prime));
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

Expr canonicalize(const Expr& e) {
  std::map<std::vector<Factor>, Rational> merged;
  for (const auto& t : e.terms()) {
    if (t.coeff == 0) continue;
    Term c = canonical_term(t);
    if (c.coeff == 0) continue;
    merged[c.factors] += c.coeff;
  }
  std::vector<Term> out;
  for (auto& [fs, c] : merged)
    if (c != 0) out.push_back(Term{c, fs});
  return Expr(std::move(out));
}

Expr expand_to_theta(const Expr& e) {
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    Term nt{t.coeff, {}};
    for (const auto& f : t.factors) {
      if (f.kind != FactorKind::Delta) {
        nt.factors.push_back(f);
        continue;
      }
      nt.factors.push_back(Factor::theta(f.arg1 * f.arg2, 1));
      nt.factors.push_back(Factor::theta_prime(1));
      nt.factors.push_back(Factor::theta(f.arg1, -1));
      nt.factors.push_back(Factor::theta(f.arg2, -1));
    }
    out.push_back(std::move(nt));
  }
  return Expr(std::move(out));
}

Expr theta_normal_form(const Expr& e) {
  const Expr expanded = expand_to_theta(e);
  std::vector<Term> out;
  for (const auto& t : expanded.terms()) {
    Term nt{t.coeff, {}};
    for (const auto& f : t.factors) {
      if (f.kind == FactorKind::Theta && !f.arg1.is_one() && f.arg1.exponents().begin()->second < 0) {
        if (f.power % 2 != 0) nt.coeff = -nt.coeff;
        nt.factors.push_back(Factor::theta(f.arg1.inverse(), f.power));
      } else {
        nt.factors.push_back(f);
      }
    }
    out.push_back(std::move(nt));
  }
  return canonicalize(Expr(std::move(out)));
}

std::set<std::string, VarLess> variables(const Expr& e) {
  std::set<std::string, VarLess> vars;
  for (const auto& t : e.terms())
    for (const auto& f : t.factors) {
      for (const auto& [v, x] : f.arg1.exponents()) vars.insert(v);
      for (const auto& [v, x] : f.arg2.exponents()) vars.insert(v);
    }
  return vars;
}

std::string to_string(const Expr& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    const auto& t = e.terms()[i];
    Rational c = t.coeff;
    if (i > 0) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0 && !t.factors.empty()) {
      s += "-";
      c = -c;
    }
    std::string body;
    for (std::size_t k = 0; k < t.factors.size(); ++k) body += (k ? "*" : "") + t.factors[k].to_string();
    if (t.factors.empty()) {
      s += format_rational(c);
    } else if (c == 1) {
      s += body;
    } else {
      s += format_rational(c) + "*" + body;
    }
  }
  return s;
}

std::string to_latex(const Expr& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    const auto& t = e.terms()[i];
    Rational c = t.coeff;
    if (i > 0) {
      s += c < 0 ? "-" : "+";
      if (c < 0) c = -c;
    } else if (c < 0 && !t.factors.empty()) {
      s += "-";
      c = -c;
    }
    std::string body;
    for (const auto& f : t.factors) body += f.to_latex();
    if (t.factors.empty()) {
      s += format_rational(c);
    } else if (c == 1) {
      s += body;
    } else if (c.denominator() == 1) {
      s += std::to_string(c.numerator()) + body;
    } else {
      s += "\\frac{" + std::to_string(c.numerator()) + "}{" + std::to_string(c.denominator()) + "}" + body;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Numeric evaluation

Complex PointAssignment::log_of(const Monomial& m) const {
  Complex l = 0.0;
  for (const auto& [v, e] : m.exponents()) {
    const auto it = logs.find(v);
    if (it == logs.end()) throw DomainError("no value assigned to variable " + v);
    l += it->second * boost::rational_cast<double>(e);
  }
  return l;
}

Complex eval_factor(const Factor& f, const PointAssignment& pt, const EvalConfig& cfg) {
  switch (f.kind) {
    case FactorKind::ThetaPrime: return std::pow(theta_prime_one(cfg), f.power);
    case FactorKind::Theta: {
      const Complex th = eval_theta(pt.log_of(f.arg1), cfg);
      if (std::abs(th) < cfg.tolerance) {
        if (f.power < 0) throw PoleError("theta factor vanishes in a denominator", f.to_string());
        return 0.0;
      }
      return std::pow(th, f.power);
    }
    case FactorKind::Delta:
      try {
        return eval_delta(pt.log_of(f.arg1), pt.log_of(f.arg2), cfg);
      } catch (const PoleError& e) {
        throw PoleError(e.what(), f.to_string() + " " + e.where());
      }
  }
  return 0.0;
}

Evaluation eval_detailed(const Expr& e, const PointAssignment& pt, const EvalConfig& cfg) {
  Evaluation r{0.0, 0.0};
  for (const auto& t : e.terms()) {
    Complex v = boost::rational_cast<double>(t.coeff);
    for (const auto& f : t.factors) v *= eval_factor(f, pt, cfg);
    r.value += v;
    r.magnitude += std::abs(v);
  }
  return r;
}

Complex eval_expr(const Expr& e, const PointAssignment& pt, const EvalConfig& cfg) {
  return eval_detailed(e, pt, cfg).value;
}

PointAssignment sample_point(const std::set<std::string, VarLess>& vars, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> im(-std::numbers::pi / 4, std::numbers::pi / 4);
  PointAssignment pt;
  for (const auto& v : vars) {
    const double a = re(rng);
    const double b = im(rng);
    pt.logs.emplace(v, Complex(a, b));
  }
  return pt;
}

PointAssignment default_point(const std::set<std::string, VarLess>& vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_point(vars, rng);
}

double relative_deviation(const Evaluation& a, const Evaluation& b) {
  const double diff = std::abs(a.value - b.value);
  const double scale = std::max({std::abs(a.value), std::abs(b.value), kCancellationFloor * (a.magnitude + b.magnitude)});
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

NumericComparison numeric_equal(const Expr& a, const Expr& b, const EvalConfig& cfg, int n_samples, std::uint64_t seed) {
  cfg.validate();
  auto vars = variables(a);
  for (const auto& v : variables(b)) vars.insert(v);
  std::mt19937_64 rng(seed);
  NumericComparison out;
  const int max_redraws = 50 * std::max(n_samples, 1);
  while (out.samples < n_samples) {
    const auto pt = sample_point(vars, rng);
    Evaluation ea;
    Evaluation eb;
    try {
      ea = eval_detailed(a, pt, cfg);
      eb = eval_detailed(b, pt, cfg);
    } catch (const PoleError&) {
      if (++out.redraws > max_redraws) throw;
      continue;
    }
    const double dev = relative_deviation(ea, eb);
    out.max_deviation = std::max(out.max_deviation, std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev);
    ++out.samples;
  }
  out.equal = out.max_deviation < cfg.tolerance;
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic forms

void QuadraticForm::add(const std::string& a, const std::string& b, const Rational& c) {
  if (c == 0) return;
  auto bump = [this](const Key& k, const Rational& x) {
    auto& slot = entries_[k];
    slot += x;
    if (slot == 0) entries_.erase(k);
  };
  bump({a, b}, c);
  if (a != b) bump({b, a}, c);
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  for (const auto& [k, c] : o.entries_) {
    auto& slot = entries_[k];
    slot += c;
    if (slot == 0) entries_.erase(k);
  }
  return *this;
}

Rational QuadraticForm::entry(const std::string& a, const std::string& b) const {
  const auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

bool QuadraticForm::is_symmetric() const {
  for (const auto& [k, c] : entries_)
    if (entry(k.second, k.first) != c) return false;
  return true;
}

std::string QuadraticForm::to_string() const {
  std::vector<std::pair<std::string, Rational>> monos;
  for (const auto& [k, c] : entries_) {
    if (k.first == k.second) {
      monos.emplace_back(k.first + "^2", c);
    } else if (VarLess{}(k.first, k.second)) {
      monos.emplace_back(k.first + "*" + k.second, 2 * c);
    }
  }
  if (monos.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    Rational c = monos[i].second;
    if (i > 0) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (c < 0) c = -c;
    s += (c == 1 ? std::string() : format_rational(c) + "*") + monos[i].first;
  }
  return s;
}

QuadraticForm quadratic_form(const Factor& f) {
  QuadraticForm q;
  switch (f.kind) {
    case FactorKind::ThetaPrime: break;
    case FactorKind::Theta: {
      const auto& ex = f.arg1.exponents();
      for (auto i = ex.begin(); i != ex.end(); ++i)
        for (auto j = i; j != ex.end(); ++j) q.add(i->first, j->first, Rational(f.power) * i->second * j->second);
      break;
    }
    case FactorKind::Delta: {
      std::set<std::string, VarLess> vars;
      for (const auto& [v, e] : f.arg1.exponents()) vars.insert(v);
      for (const auto& [v, e] : f.arg2.exponents()) vars.insert(v);
      for (auto i = vars.begin(); i != vars.end(); ++i)
        for (auto j = i; j != vars.end(); ++j) {
          const Rational c = f.arg1.exponent(*i) * f.arg2.exponent(*j) + f.arg1.exponent(*j) * f.arg2.exponent(*i);
          q.add(*i, *j, c);
        }
      break;
    }
  }
  return q;
}

QuadraticForm quadratic_form(const Term& t) {
  QuadraticForm q;
  for (const auto& f : t.factors) q += quadratic_form(f);
  return q;
}

bool transformation_check(const Expr& e) {
  const Expr c = canonicalize(e);
  if (c.terms().size() < 2) return true;
  const QuadraticForm first = quadratic_form(c.terms().front());
  return std::all_of(c.terms().begin() + 1, c.terms().end(),
                     [&first](const Term& t) { return quadratic_form(t) == first; });
}

}  // namespace ellschub
