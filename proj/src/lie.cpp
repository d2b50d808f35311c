#include "ellschub/lie.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ellschub {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Unique solution of A x = b, or nullopt when inconsistent. Throws if underdetermined.
std::optional<std::vector<Rational>> solve_unique(const RMatrix& a, const std::vector<Rational>& b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = row_reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) throw ConfigError("linear system is underdetermined");
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

// Integer basis of {x : rows . x = 0}, each vector primitive with positive leading entry.
std::vector<IntVec> integer_nullspace(const std::vector<IntVec>& rows, int dim) {
  RMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const auto pivots = row_reduce(m, static_cast<std::size_t>(dim));
  std::vector<IntVec> basis;
  for (int free = 0; free < dim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), static_cast<std::size_t>(free)) != pivots.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][static_cast<std::size_t>(free)];
    std::int64_t lcm = 1;
    for (const auto& x : v) lcm = std::lcm(lcm, x.denominator());
    IntVec iv;
    std::int64_t g = 0;
    for (const auto& x : v) {
      const auto n = x.numerator() * (lcm / x.denominator());
      iv.push_back(static_cast<int>(n));
      g = std::gcd(g, n);
    }
    if (g > 1) for (auto& x : iv) x /= static_cast<int>(g);
    const auto lead = std::find_if(iv.begin(), iv.end(), [](int x) { return x != 0; });
    if (lead != iv.end() && *lead < 0) for (auto& x : iv) x = -x;
    basis.push_back(iv);
  }
  return basis;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int dim) {
  std::vector<int> c(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const int aik = a[static_cast<std::size_t>(i * dim + k)];
      if (aik == 0) continue;
      for (int j = 0; j < dim; ++j) c[static_cast<std::size_t>(i * dim + j)] += aik * b[static_cast<std::size_t>(k * dim + j)];
    }
  return c;
}

std::vector<int> mat_act_vec(const std::vector<int>& m, const IntVec& x, int dim) {
  IntVec y(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) y[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i * dim + j)] * x[static_cast<std::size_t>(j)];
  return y;
}

std::vector<int> reflection_matrix(const IntVec& root, const IntVec& coroot) {
  const int dim = static_cast<int>(root.size());
  std::vector<int> m(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m[static_cast<std::size_t>(i * dim + j)] = (i == j ? 1 : 0) - root[static_cast<std::size_t>(i)] * coroot[static_cast<std::size_t>(j)];
  return m;
}

IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

std::string to_string(Family f) { return f == Family::A ? "A" : "C"; }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  throw ConfigError("unsupported root system family '" + s + "' (expected A or C)");
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(Family family, int rank) {
  if (rank < 1) throw ConfigError("root system rank must be at least 1");
  if (family == Family::C && rank < 2) throw ConfigError("type C requires rank >= 2");
  if (rank > 8) throw ConfigError("rank above 8 is outside desk scale");
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.dim_ = family == Family::A ? rank + 1 : rank;
  const auto d = static_cast<std::size_t>(rs.dim_);
  for (int i = 0; i < rank; ++i) {
    IntVec a(d, 0);
    if (family == Family::C && i == rank - 1) {
      a[static_cast<std::size_t>(i)] = 2;
    } else {
      a[static_cast<std::size_t>(i)] = 1;
      a[static_cast<std::size_t>(i + 1)] = -1;
    }
    rs.simple_.push_back(a);
  }
  for (const auto& a : rs.simple_) rs.simple_co_.push_back(rs.coroot(a));

  // All roots: closure of the simple roots under simple reflections.
  std::set<IntVec> roots(rs.simple_.begin(), rs.simple_.end());
  std::deque<IntVec> queue(rs.simple_.begin(), rs.simple_.end());
  while (!queue.empty()) {
    const IntVec x = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_) {
      IntVec y = rs.reflect(x, a);
      if (roots.insert(y).second) queue.push_back(std::move(y));
    }
  }
  for (const auto& r : roots) {
    const auto c = rs.simple_coordinates(r);
    if (c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; })) rs.positive_.push_back(r);
  }
  // Sort by height, then lexicographically (descending) for a stable listing.
  std::sort(rs.positive_.begin(), rs.positive_.end(), [&rs](const IntVec& a, const IntVec& b) {
    const auto ca = *rs.simple_coordinates(a);
    const auto cb = *rs.simple_coordinates(b);
    const Rational ha = std::accumulate(ca.begin(), ca.end(), Rational(0));
    const Rational hb = std::accumulate(cb.begin(), cb.end(), Rational(0));
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return rs;
}

RootSystem build_root_system(Family family, int rank) { return RootSystem::build(family, rank); }

const IntVec& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw DomainError("simple root index out of range");
  return simple_[static_cast<std::size_t>(i - 1)];
}

const IntVec& RootSystem::simple_coroot(int i) const {
  if (i < 1 || i > rank_) throw DomainError("simple coroot index out of range");
  return simple_co_[static_cast<std::size_t>(i - 1)];
}

IntVec RootSystem::coroot(const IntVec& root) const {
  const int norm = dot(root, root);
  IntVec c(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    if ((2 * root[i]) % norm != 0) throw DomainError("coroot is not integral: " + format_vector(root));
    c[i] = 2 * root[i] / norm;
  }
  return c;
}

bool RootSystem::is_root(const IntVec& v) const { return is_positive_root(v) || is_negative_root(v); }

bool RootSystem::is_positive_root(const IntVec& v) const {
  return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
}

bool RootSystem::is_negative_root(const IntVec& v) const { return is_positive_root(negate(v)); }

IntVec RootSystem::reflect(const IntVec& x, const IntVec& root) const {
  const IntVec co = coroot(root);
  const int p = dot(x, co);
  IntVec y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= p * root[i];
  return y;
}

std::optional<std::vector<Rational>> RootSystem::simple_coordinates(const IntVec& v) const {
  RMatrix a(static_cast<std::size_t>(dim_), std::vector<Rational>(static_cast<std::size_t>(rank_)));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < dim_; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = simple_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return solve_unique(a, std::vector<Rational>(v.begin(), v.end()));
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_)));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) c[i][j] = dot(simple_[i], simple_co_[j]);
  return c;
}

// ---------------------------------------------------------------------------
// WeylElement / WeylGroup

IntVec WeylElement::act(const IntVec& x) const { return mat_act_vec(matrix_, x, dim_); }

std::vector<Rational> WeylElement::act(const std::vector<Rational>& x) const {
  std::vector<Rational> y(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[static_cast<std::size_t>(i)] += matrix_[static_cast<std::size_t>(i * dim_ + j)] * x[static_cast<std::size_t>(j)];
  return y;
}

std::string to_string(BruhatRelation r) {
  switch (r) {
    case BruhatRelation::Less: return "less";
    case BruhatRelation::Equal: return "equal";
    case BruhatRelation::Greater: return "greater";
    case BruhatRelation::Incomparable: return "incomparable";
  }
  return "?";
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int dim = rs_.dim();
  const int rank = rs_.rank();
  std::vector<std::vector<int>> simple_mats;
  for (int i = 1; i <= rank; ++i) simple_mats.push_back(reflection_matrix(rs_.simple_root(i), rs_.simple_coroot(i)));

  std::vector<int> id(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i * dim + i)] = 1;

  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  std::vector<std::vector<int>> mats;
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (const auto& s : simple_mats) {
      auto p = mat_mul(m, s, dim);
      if (seen.insert(p).second) queue.push_back(p);
    }
    mats.push_back(std::move(m));
    if (mats.size() > 50000) throw ConfigError("Weyl group too large for enumeration");
  }

  for (auto& m : mats) {
    WeylElement e;
    e.dim_ = dim;
    e.matrix_ = m;
    for (const auto& b : rs_.positive_roots())
      if (rs_.is_negative_root(mat_act_vec(m, b, dim))) ++e.length_;
    // Peel right descents: w = (w s_i) s_i whenever w alpha_i < 0.
    auto cur = m;
    ReducedWord rev;
    for (int remaining = e.length_; remaining > 0; --remaining) {
      for (int i = 1; i <= rank; ++i) {
        if (rs_.is_negative_root(mat_act_vec(cur, rs_.simple_root(i), dim))) {
          rev.push_back(i);
          cur = mat_mul(cur, simple_mats[static_cast<std::size_t>(i - 1)], dim);
          break;
        }
      }
    }
    e.word_.assign(rev.rbegin(), rev.rend());
    elements_.push_back(std::move(e));
  }
  std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.word_ < b.word_;
  });
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    elements_[i].index_ = i;
    index.emplace(elements_[i].matrix_, i);
  }
  right_table_.assign(elements_.size(), std::vector<std::size_t>(static_cast<std::size_t>(rank)));
  left_table_.assign(elements_.size(), std::vector<std::size_t>(static_cast<std::size_t>(rank)));
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (int j = 0; j < rank; ++j) {
      right_table_[i][static_cast<std::size_t>(j)] = index.at(mat_mul(elements_[i].matrix_, simple_mats[static_cast<std::size_t>(j)], dim));
      left_table_[i][static_cast<std::size_t>(j)] = index.at(mat_mul(simple_mats[static_cast<std::size_t>(j)], elements_[i].matrix_, dim));
    }

  // Lower Bruhat intervals: products of all subwords of the stored reduced word.
  below_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    std::vector<std::size_t> reach{0};
    below_[w][0] = true;
    for (int letter : elements_[w].word_) {
      const std::size_t count = reach.size();
      for (std::size_t k = 0; k < count; ++k) {
        const auto x = right_mult(reach[k], letter);
        if (!below_[w][x]) {
          below_[w][x] = true;
          reach.push_back(x);
        }
      }
    }
  }
}

std::size_t WeylGroup::left_mult(int letter, std::size_t idx) const {
  return left_table_.at(idx).at(static_cast<std::size_t>(letter - 1));
}

std::size_t WeylGroup::right_mult(std::size_t idx, int letter) const {
  return right_table_.at(idx).at(static_cast<std::size_t>(letter - 1));
}

const WeylElement& WeylGroup::simple_reflection(int i) const {
  if (i < 1 || i > rs_.rank()) throw DomainError("simple reflection index out of range");
  return elements_[right_mult(0, i)];
}

const WeylElement& WeylGroup::longest() const { return elements_.back(); }

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  std::size_t idx = a.index_;
  for (int letter : b.word_) idx = right_mult(idx, letter);
  return elements_[idx];
}

const WeylElement& WeylGroup::inverse(const WeylElement& a) const {
  std::size_t idx = 0;
  for (auto it = a.word_.rbegin(); it != a.word_.rend(); ++it) idx = right_mult(idx, *it);
  return elements_[idx];
}

const WeylElement& WeylGroup::from_word(const std::vector<int>& letters) const {
  std::size_t idx = 0;
  for (int letter : letters) {
    if (letter < 1 || letter > rs_.rank()) throw DomainError("word letter out of range");
    idx = right_mult(idx, letter);
  }
  return elements_[idx];
}

const WeylElement& WeylGroup::reflection(const IntVec& root) const {
  if (!rs_.is_root(root)) throw DomainError("not a root: " + format_vector(root));
  return from_matrix(reflection_matrix(root, rs_.coroot(root)));
}

const WeylElement& WeylGroup::from_matrix(const std::vector<int>& matrix) const {
  for (const auto& e : elements_)
    if (e.matrix_ == matrix) return e;
  throw DomainError("matrix is not an element of the Weyl group");
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const { return below_.at(w.index_).at(u.index_); }

BruhatRelation WeylGroup::compare(const WeylElement& u, const WeylElement& w) const {
  if (u.index_ == w.index_) return BruhatRelation::Equal;
  if (bruhat_leq(u, w)) return BruhatRelation::Less;
  if (bruhat_leq(w, u)) return BruhatRelation::Greater;
  return BruhatRelation::Incomparable;
}

BruhatRelation weyl_compare(const WeylGroup& group, const WeylElement& u, const WeylElement& w) { return group.compare(u, w); }

// ---------------------------------------------------------------------------
// ParabolicSetup

ParabolicSetup::ParabolicSetup(std::shared_ptr<const WeylGroup> group, std::vector<int> levi)
    : group_(std::move(group)), levi_(std::move(levi)) {
  const auto& rs = group_->root_system();
  std::sort(levi_.begin(), levi_.end());
  levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
  for (int i : levi_)
    if (i < 1 || i > rs.rank()) throw ConfigError("parabolic index " + std::to_string(i) + " out of range");

  // W_P: closure of the identity under the Levi reflections.
  std::vector<bool> in_wp(group_->size(), false);
  std::deque<std::size_t> queue{0};
  in_wp[0] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    levi_group_.push_back(x);
    for (int i : levi_) {
      const auto y = group_->multiply((*group_)[x], group_->simple_reflection(i)).index();
      if (!in_wp[y]) {
        in_wp[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(levi_group_.begin(), levi_group_.end());

  coset_rep_of_.resize(group_->size());
  quotient_pos_.assign(group_->size(), -1);
  for (const auto& e : group_->elements()) {
    const WeylElement* cur = &e;
    for (bool reduced = false; !reduced;) {
      reduced = true;
      for (int i : levi_) {
        if (rs.is_negative_root(cur->act(rs.simple_root(i)))) {
          cur = &group_->multiply(*cur, group_->simple_reflection(i));
          reduced = false;
          break;
        }
      }
    }
    coset_rep_of_[e.index()] = cur->index();
    if (cur->index() == e.index()) {
      quotient_pos_[e.index()] = static_cast<long>(min_reps_.size());
      min_reps_.push_back(e.index());
    }
  }

  const auto d = static_cast<std::size_t>(rs.dim());
  rho_.assign(d, Rational(0));
  rho_levi_.assign(d, Rational(0));
  for (const auto& b : rs.positive_roots()) {
    const auto c = *rs.simple_coordinates(b);
    bool levi_root = true;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0 && !in_levi(static_cast<int>(j) + 1)) levi_root = false;
    for (std::size_t i = 0; i < d; ++i) {
      rho_[i] += Rational(b[i], 2);
      if (levi_root) rho_levi_[i] += Rational(b[i], 2);
    }
  }

  if (rs.family() == Family::A) {
    const int n = rs.dim();
    rho_bar_.assign(d, 0);
    for (int i = n - 1; i >= 1; --i)
      rho_bar_[static_cast<std::size_t>(i - 1)] = rho_bar_[static_cast<std::size_t>(i)] + (in_levi(i) ? 1 : 0);
    int s = 1;
    for (const auto& block : blocks()) {
      IntVec b(d, 0);
      for (int pos : block) b[static_cast<std::size_t>(pos - 1)] = -1;
      dyn_.push_back({"mu" + std::to_string(s++), b});
    }
  } else {
    RMatrix a;
    std::vector<Rational> rhs;
    for (int i = 1; i <= rs.rank(); ++i) {
      const auto& co = rs.simple_coroot(i);
      a.emplace_back(co.begin(), co.end());
      rhs.emplace_back(in_levi(i) ? 1 : 0);
    }
    const auto sol = solve_unique(a, rhs);
    if (!sol) throw ConfigError("rho_bar has no solution");
    for (const auto& x : *sol) {
      if (x.denominator() != 1) throw ConfigError("rho_bar is not integral for this setup");
      rho_bar_.push_back(static_cast<int>(x.numerator()));
    }
    std::vector<IntVec> rows;
    for (int i : levi_) rows.push_back(rs.simple_coroot(i));
    const auto basis = integer_nullspace(rows, rs.dim());
    for (std::size_t k = 0; k < basis.size(); ++k)
      dyn_.push_back({basis.size() == 1 ? std::string("mu") : "mu" + std::to_string(k + 1), basis[k]});
  }
}

ParabolicSetup ParabolicSetup::type_a_blocks(const std::vector<int>& k) {
  if (k.empty()) throw ConfigError("block sizes must be non-empty");
  int n = 0;
  std::vector<int> levi;
  for (int size : k) {
    if (size < 1) throw ConfigError("block sizes must be positive");
    for (int j = 1; j < size; ++j) levi.push_back(n + j);
    n += size;
  }
  if (n < 2) throw ConfigError("block sizes must sum to at least 2");
  auto group = std::make_shared<const WeylGroup>(RootSystem::build(Family::A, n - 1));
  return ParabolicSetup(std::move(group), std::move(levi));
}

ParabolicSetup parabolic_setup(const RootSystem& rs, std::vector<int> levi) {
  return ParabolicSetup(std::make_shared<const WeylGroup>(rs), std::move(levi));
}

bool ParabolicSetup::in_levi(int i) const { return std::binary_search(levi_.begin(), levi_.end(), i); }

bool ParabolicSetup::is_min_rep(const WeylElement& w) const { return coset_rep_of_.at(w.index()) == w.index(); }

const WeylElement& ParabolicSetup::coset_rep(const WeylElement& w) const { return (*group_)[coset_rep_of_.at(w.index())]; }

std::size_t ParabolicSetup::quotient_position(const WeylElement& w) const {
  const long p = quotient_pos_.at(w.index());
  if (p < 0) throw DomainError("element is not a minimal coset representative");
  return static_cast<std::size_t>(p);
}

std::vector<std::vector<int>> ParabolicSetup::blocks() const {
  if (root_system().family() != Family::A) throw DomainError("blocks are defined for type A only");
  std::vector<std::vector<int>> out{{1}};
  for (int i = 1; i < root_system().dim(); ++i) {
    if (!in_levi(i)) out.emplace_back();
    out.back().push_back(i + 1);
  }
  return out;
}

std::vector<int> ParabolicSetup::block_sizes() const {
  std::vector<int> k;
  for (const auto& b : blocks()) k.push_back(static_cast<int>(b.size()));
  return k;
}

std::vector<IntVec> ParabolicSetup::levi_negative_roots() const {
  const auto& rs = root_system();
  std::vector<IntVec> out;
  for (const auto& b : rs.positive_roots()) {
    const auto c = *rs.simple_coordinates(b);
    bool levi_root = true;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0 && !in_levi(static_cast<int>(j) + 1)) levi_root = false;
    if (levi_root) out.push_back(negate(b));
  }
  return out;
}

std::string ParabolicSetup::label() const {
  std::ostringstream os;
  os << to_string(root_system().family()) << root_system().rank();
  if (levi_.empty()) {
    os << " P=B";
  } else {
    os << " S={";
    for (std::size_t i = 0; i < levi_.size(); ++i) os << (i ? "," : "") << levi_[i];
    os << "}";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Divisor combinatorics

std::vector<Cover> covers_in_WP(const ParabolicSetup& setup, const WeylElement& w) {
  if (!setup.is_min_rep(w)) throw DomainError("covers_in_WP: w is not in W^P");
  const auto& group = setup.group();
  const auto& rs = setup.root_system();
  std::vector<Cover> out;
  for (auto idx : setup.min_coset_reps()) {
    const auto& v = group[idx];
    if (v.length() != w.length() - 1 || !group.bruhat_leq(v, w)) continue;
    std::vector<IntVec> found;
    for (const auto& b : rs.positive_roots())
      if (group.multiply(group.reflection(b), w) == v) found.push_back(b);
    if (found.size() != 1) throw std::logic_error("cover root is not unique");
    out.push_back({idx, found.front()});
  }
  return out;
}

int multiplicity_m(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v) {
  for (const auto& c : covers_in_WP(setup, w)) {
    if (c.v == v.index()) return 1 - dot(w.act(setup.rho_bar()), setup.root_system().coroot(c.beta));
  }
  throw DomainError("multiplicity_m: v is not covered by w in W^P");
}

std::vector<GammaEntry> gamma_data(const WeylGroup& group, const ReducedWord& word) {
  if (group.from_word(word).length() != static_cast<int>(word.size()))
    throw DomainError("gamma_data: word " + format_word(word) + " is not reduced");
  const auto& rs = group.root_system();
  const std::size_t l = word.size();
  std::vector<GammaEntry> out;
  for (std::size_t i = 0; i < l; ++i) {
    IntVec gamma = rs.simple_root(word[i]);
    for (std::size_t k = i + 1; k < l; ++k) gamma = rs.reflect(gamma, rs.simple_root(word[k]));
    IntVec beta = rs.simple_root(word[i]);
    for (std::size_t k = i; k-- > 0;) beta = rs.reflect(beta, rs.simple_root(word[k]));
    GammaEntry g;
    g.gamma_coroot = rs.coroot(gamma);
    g.gamma = std::move(gamma);
    g.beta_coroot = rs.coroot(beta);
    g.beta = std::move(beta);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<int> bsdh_multiplicities(const ParabolicSetup& setup, const ReducedWord& word) {
  std::vector<int> m;
  for (const auto& g : gamma_data(setup.group(), word)) m.push_back(1 + dot(setup.rho_bar(), g.gamma_coroot));
  return m;
}

TangentWeights tangent_weights(const ParabolicSetup& setup, const WeylElement& w) {
  if (!setup.is_min_rep(w)) throw DomainError("tangent_weights: w is not in W^P");
  const auto& rs = setup.root_system();
  const auto& winv = setup.group().inverse(w);
  TangentWeights t;
  for (const auto& b : rs.positive_roots())
    if (rs.is_negative_root(winv.act(b))) t.schubert.push_back(b);
  const auto levi_neg = setup.levi_negative_roots();
  for (const auto& b : rs.positive_roots()) {
    const IntVec nb = negate(b);
    if (std::find(levi_neg.begin(), levi_neg.end(), nb) != levi_neg.end()) continue;
    t.ambient.push_back(w.act(nb));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Type A helpers and formatting

std::vector<int> permutation_of(const WeylElement& w) {
  const int n = w.dim();
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (w.matrix()[static_cast<std::size_t>(r * n + c)] == 1) perm[static_cast<std::size_t>(c)] = r + 1;
  for (int x : perm)
    if (x == 0) throw DomainError("permutation_of: not a permutation matrix");
  return perm;
}

const WeylElement& element_of_permutation(const WeylGroup& group, const std::vector<int>& perm) {
  const int n = group.root_system().dim();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation has wrong size");
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int c = 0; c < n; ++c) {
    const int r = perm[static_cast<std::size_t>(c)] - 1;
    if (r < 0 || r >= n) throw DomainError("permutation entry out of range");
    m[static_cast<std::size_t>(r * n + c)] = 1;
  }
  return group.from_matrix(m);
}

std::string one_line(const WeylElement& w) {
  std::string s;
  for (int x : permutation_of(w)) s += std::to_string(x);
  return s;
}

std::string format_word(const ReducedWord& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s" : "s") + std::to_string(word[i]);
  return s;
}

std::string format_vector(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace ellschub
