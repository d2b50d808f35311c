#include "ellschub/schubert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ellschub {

// ---------------------------------------------------------------------------
// LambdaSymbol

LambdaSymbol::LambdaSymbol(const ParabolicSetup& setup)
    : basis_(setup.dynamical_basis()),
      rho_bar_(setup.rho_bar()),
      shift_(static_cast<std::size_t>(setup.root_system().dim()), 0) {}

LambdaSymbol LambdaSymbol::minus_rho_bar() const {
  LambdaSymbol out = *this;
  for (std::size_t i = 0; i < shift_.size(); ++i) out.shift_[i] -= rho_bar_[i];
  return out;
}

Monomial LambdaSymbol::pair(const IntVec& coweight) const {
  Monomial m = Monomial::var(kH, dot(shift_, coweight));
  for (const auto& b : basis_) m *= Monomial::var(b.name, dot(b.weight, coweight));
  return m;
}

// ---------------------------------------------------------------------------
// Localization

Expr bsdh_restriction(const WeylGroup& group, const ReducedWord& word, const std::vector<bool>& keep,
                      const LambdaSymbol& lambda) {
  if (keep.size() != word.size()) throw DomainError("bsdh_restriction: mask length differs from word length");
  const auto gammas = gamma_data(group, word);
  const auto& rs = group.root_system();
  std::vector<Factor> fs;
  const WeylElement* cur = &group.identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (keep[i]) cur = &group.multiply(*cur, group.simple_reflection(word[i]));
    IntVec root = cur->act(rs.simple_root(word[i]));
    for (int& x : root) x = -x;
    const Monomial psi = keep[i] ? Monomial::var(kH) : lambda.pair(gammas[i].gamma_coroot);
    fs.push_back(Factor::delta(Monomial::character(root), psi));
  }
  return Expr::product(std::move(fs));
}

namespace {

const WeylElement& subword_product(const WeylGroup& group, const ReducedWord& word, const std::vector<bool>& keep) {
  const WeylElement* cur = &group.identity();
  for (std::size_t i = 0; i < word.size(); ++i)
    if (keep[i]) cur = &group.multiply(*cur, group.simple_reflection(word[i]));
  return *cur;
}

std::vector<std::vector<bool>> all_masks(std::size_t len) {
  std::vector<std::vector<bool>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    std::vector<bool> keep(len);
    for (std::size_t i = 0; i < len; ++i) keep[i] = ((bits >> i) & 1U) != 0;
    out.push_back(std::move(keep));
  }
  return out;
}

}  // namespace

std::vector<LocalizationSummand> localization_summands(const ParabolicSetup& setup, const WeylElement& w,
                                                       const WeylElement& v) {
  if (!setup.is_min_rep(w) || !setup.is_min_rep(v)) throw DomainError("localization: w and v must lie in W^P");
  const auto& group = setup.group();
  const LambdaSymbol lambda = LambdaSymbol(setup).minus_rho_bar();
  std::vector<LocalizationSummand> out;
  for (auto& keep : all_masks(w.word().size())) {
    if (setup.coset_rep(subword_product(group, w.word(), keep)).index() != v.index()) continue;
    Expr value = bsdh_restriction(group, w.word(), keep, lambda);
    out.push_back({std::move(keep), std::move(value)});
  }
  return out;
}

Expr class_localization(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v) {
  Expr sum;
  for (const auto& s : localization_summands(setup, w, v)) sum += s.value;
  return canonicalize(sum);
}

std::string to_string(Provenance p) { return p == Provenance::Localization ? "localization" : "recursion"; }

ClassTable::ClassTable(ParabolicSetup setup, Provenance provenance, std::vector<std::vector<Expr>> entries)
    : setup_(std::move(setup)), provenance_(provenance), entries_(std::move(entries)) {}

const Expr& ClassTable::at(const WeylElement& w, const WeylElement& v) const {
  return entries_.at(setup_.quotient_position(w)).at(setup_.quotient_position(v));
}

ClassTable localization_table(const ParabolicSetup& setup) {
  const auto& group = setup.group();
  const auto& reps = setup.min_coset_reps();
  const LambdaSymbol lambda = LambdaSymbol(setup).minus_rho_bar();
  std::vector<std::vector<Expr>> rows(reps.size(), std::vector<Expr>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const auto& w = group[reps[a]];
    for (const auto& keep : all_masks(w.word().size())) {
      const auto& v = setup.coset_rep(subword_product(group, w.word(), keep));
      rows[a][setup.quotient_position(v)] += bsdh_restriction(group, w.word(), keep, lambda);
    }
    for (auto& e : rows[a]) e = canonicalize(e);
  }
  return ClassTable(setup, Provenance::Localization, std::move(rows));
}

// ---------------------------------------------------------------------------
// Recursion

ClassTable recursion_table(const ParabolicSetup& setup, const LambdaSymbol& lambda, DescentRule rule) {
  const auto& group = setup.group();
  const auto& rs = setup.root_system();
  const auto& reps = setup.min_coset_reps();
  std::vector<std::vector<Expr>> rows(reps.size(), std::vector<Expr>(reps.size()));
  rows[0][0] = Expr::one();
  for (std::size_t a = 1; a < reps.size(); ++a) {
    const auto& w = group[reps[a]];
    int letter = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (group.multiply(group.simple_reflection(i), w).length() >= w.length()) continue;
      letter = i;
      if (rule == DescentRule::Smallest) break;
    }
    if (letter == 0) throw std::logic_error("recursion: element without a left descent");
    const auto& s = group.simple_reflection(letter);
    const auto& prev = group.multiply(s, w);
    const auto& prev_row = rows.at(setup.quotient_position(prev));

    const IntVec& alpha = rs.simple_root(letter);
    IntVec minus_alpha = alpha;
    for (int& x : minus_alpha) x = -x;
    const Expr first = Expr::factor(
        Factor::delta(Monomial::character(minus_alpha), lambda.pair(group.inverse(prev).act(rs.simple_coroot(letter)))));
    const Expr second = Expr::factor(Factor::delta(Monomial::character(alpha), Monomial::var(kH)));

    for (std::size_t b = 0; b < reps.size(); ++b) {
      const auto& v = group[reps[b]];
      Expr e;
      if (!prev_row[b].is_zero()) e += first * prev_row[b];
      const auto& sv = setup.coset_rep(group.multiply(s, v));
      const Expr& other = prev_row[setup.quotient_position(sv)];
      if (!other.is_zero()) e += second * act_on_z(other, s);
      rows[a][b] = canonicalize(e);
    }
  }
  return ClassTable(setup, Provenance::Recursion, std::move(rows));
}

ClassTable recursion_table(const ParabolicSetup& setup, DescentRule rule) {
  return recursion_table(setup, LambdaSymbol(setup).minus_rho_bar(), rule);
}

Expr class_recursion(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v) {
  return recursion_table(setup).at(w, v);
}

// ---------------------------------------------------------------------------
// Type A

namespace {

std::vector<int> block_of_positions(const std::vector<int>& k) {
  std::vector<int> out;
  for (std::size_t s = 0; s < k.size(); ++s) {
    if (k[s] < 1) throw ConfigError("block sizes must be positive");
    out.insert(out.end(), static_cast<std::size_t>(k[s]), static_cast<int>(s));
  }
  return out;
}

}  // namespace

std::vector<int> r_vector(const std::vector<int>& k) {
  const auto block = block_of_positions(k);
  if (block.empty()) return {};
  std::vector<int> r(block.size(), 0);
  for (std::size_t i = block.size() - 1; i-- > 0;) r[i] = r[i + 1] + (block[i] == block[i + 1] ? 1 : 0);
  return r;
}

namespace {

int inversions(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

std::vector<int> sort_blocks(std::vector<int> w, const std::vector<int>& k) {
  auto it = w.begin();
  for (int size : k) {
    std::sort(it, it + size);
    it += size;
  }
  return w;
}

std::vector<int> swap_values(std::vector<int> w, int i) {
  for (int& x : w) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return w;
}

int position_of(const std::vector<int>& w, int value) {
  return static_cast<int>(std::find(w.begin(), w.end(), value) - w.begin());
}

}  // namespace

std::vector<std::vector<int>> TypeATable::enumerate_cosets(const std::vector<int>& k) {
  if (k.empty() || std::any_of(k.begin(), k.end(), [](int x) { return x < 1; }))
    throw ConfigError("block sizes must be positive");
  const int n = std::accumulate(k.begin(), k.end(), 0);
  if (n < 1 || n > 9) throw ConfigError("type A tables support n <= 9");
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (sort_blocks(perm, k) == perm) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return inversions(a) < inversions(b); });
  return out;
}

TypeATable::TypeATable(std::vector<int> k) : k_(std::move(k)) {
  cosets_ = enumerate_cosets(k_);
  for (std::size_t i = 0; i < cosets_.size(); ++i) pos_.emplace(cosets_[i], i);

  const auto r = r_vector(k_);
  const auto block = block_of_positions(k_);
  std::vector<int> first_of_block;
  for (int s = 0, p = 1; s < static_cast<int>(k_.size()); p += k_[static_cast<std::size_t>(s)], ++s)
    first_of_block.push_back(p);
  auto y_of_position = [&](int pos0) {
    return Monomial::var(y_var(first_of_block[static_cast<std::size_t>(block[static_cast<std::size_t>(pos0)])]));
  };

  const std::size_t size = cosets_.size();
  rows_.assign(size, std::vector<Expr>(size));
  rows_[0][0] = Expr::one();
  for (std::size_t a = 1; a < size; ++a) {
    const auto& w = cosets_[a];
    int i = 1;
    while (position_of(w, i) < position_of(w, i + 1)) ++i;
    const auto prev = swap_values(w, i);
    const auto& prev_row = rows_[pos_.at(prev)];
    const int pa = position_of(prev, i);
    const int pb = position_of(prev, i + 1);
    const Monomial lam = Monomial::var(kH, r[static_cast<std::size_t>(pb)] - r[static_cast<std::size_t>(pa)]) *
                         y_of_position(pb) / y_of_position(pa);
    const Monomial zi = Monomial::var(z_var(i));
    const Monomial zj = Monomial::var(z_var(i + 1));
    const Expr first = Expr::factor(Factor::delta(zj / zi, lam));
    const Expr second = Expr::factor(Factor::delta(zi / zj, Monomial::var(kH)));
    for (std::size_t b = 0; b < size; ++b) {
      Expr e;
      if (!prev_row[b].is_zero()) e += first * prev_row[b];
      const Expr& other = prev_row[pos_.at(sort_blocks(swap_values(cosets_[b], i), k_))];
      if (!other.is_zero()) e += second * swap_z(other, i);
      rows_[a][b] = canonicalize(e);
    }
  }
}

std::size_t TypeATable::position(const std::vector<int>& w) const {
  const auto it = pos_.find(w);
  if (it == pos_.end()) throw DomainError("permutation is not a minimal coset representative");
  return it->second;
}

const Expr& TypeATable::at(const std::vector<int>& w, const std::vector<int>& v) const {
  return rows_[position(w)][position(v)];
}

Expr typeA_recursion(const std::vector<int>& k, const std::vector<int>& w, const std::vector<int>& v) {
  return TypeATable(k).at(w, v);
}

std::map<std::string, Monomial> mu_to_y(const ParabolicSetup& setup) {
  std::map<std::string, Monomial> out;
  const auto blocks = setup.blocks();
  for (std::size_t s = 0; s < blocks.size(); ++s)
    out.emplace(mu_var(static_cast<int>(s) + 1), Monomial::var(y_var(blocks[s].front())));
  return out;
}

// ---------------------------------------------------------------------------
// Checks

ClassTable shifted_borel_table(const ParabolicSetup& setup) {
  const ParabolicSetup borel(setup.group_ptr(), {});
  return recursion_table(borel, LambdaSymbol(setup).minus_rho_bar());
}

NumericComparison pushforward_check(const ClassTable& parabolic, const ClassTable& shifted_borel,
                                    const WeylElement& w, const WeylElement& v, const EvalConfig& cfg, int samples,
                                    std::uint64_t seed) {
  const auto& setup = parabolic.setup();
  const auto& group = setup.group();
  Expr sum;
  for (auto u : setup.levi_group()) sum += shifted_borel.at(w, group.multiply(v, group[u]));
  return numeric_equal(parabolic.at(w, v), canonicalize(sum), cfg, samples, seed);
}

NumericComparison pushforward_check(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v,
                                    const EvalConfig& cfg, int samples, std::uint64_t seed) {
  return pushforward_check(recursion_table(setup), shifted_borel_table(setup), w, v, cfg, samples, seed);
}

Expr diagonal_class(const ParabolicSetup& setup, const WeylElement& w) {
  std::vector<Factor> fs;
  for (const auto& beta : tangent_weights(setup, w).schubert)
    fs.push_back(Factor::delta(Monomial::character(beta), Monomial::var(kH)));
  return canonicalize(Expr::product(std::move(fs)));
}

bool normalization_check(const ClassTable& table, const WeylElement& w) {
  return table.at(w, w) == diagonal_class(table.setup(), w);
}

bool triangularity_check(const ClassTable& table) {
  const auto& setup = table.setup();
  const auto& group = setup.group();
  for (auto wi : setup.min_coset_reps())
    for (auto vi : setup.min_coset_reps())
      if (!group.bruhat_leq(group[vi], group[wi]) && !table.at(group[wi], group[vi]).is_zero()) return false;
  return true;
}

GkmReport gkm_probe(const ClassTable& table, const WeylElement& w, const WeylElement& v2, const IntVec& alpha,
                    const EvalConfig& cfg, std::uint64_t seed) {
  const auto& setup = table.setup();
  const auto& group = setup.group();
  if (!setup.root_system().is_root(alpha)) throw DomainError("gkm_probe: alpha is not a root");
  const auto& v1 = setup.coset_rep(group.multiply(v2, group.reflection(alpha)));
  const Expr& e1 = table.at(w, v1);
  const Expr& e2 = table.at(w, v2);
  const std::vector<std::pair<std::string, Expr>> fns{
      {"E_v1", e1}, {"E_v2", e2}, {"E_v1 - E_v2", e1 - e2}, {"E_v1 + E_v2", e1 + e2}};

  GkmReport report;
  report.w = format_word(w.word());
  report.v1 = format_word(v1.word());
  report.v2 = format_word(v2.word());
  report.alpha = alpha;
  report.eps = {1e-2, 1e-3, 1e-4};

  auto vars = variables(e1);
  for (const auto& v : variables(e2)) vars.insert(v);
  for (int k = 1; k <= setup.root_system().dim(); ++k) vars.insert(z_var(k));
  const PointAssignment base = default_point(vars, seed);
  const double norm2 = dot(alpha, alpha);

  std::vector<std::vector<double>> mags(fns.size());
  for (double eps : report.eps) {
    PointAssignment pt = base;
    Complex pairing = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) pairing += static_cast<double>(alpha[k]) * pt.logs.at(z_var(static_cast<int>(k) + 1));
    const Complex t = (eps - pairing) / norm2;
    for (std::size_t k = 0; k < alpha.size(); ++k) pt.logs.at(z_var(static_cast<int>(k) + 1)) += t * static_cast<double>(alpha[k]);
    for (std::size_t f = 0; f < fns.size(); ++f) mags[f].push_back(std::abs(eval_expr(fns[f].second, pt, cfg)));
  }
  const double ea = report.eps[report.eps.size() - 2];
  const double eb = report.eps.back();
  for (std::size_t f = 0; f < fns.size(); ++f) {
    PoleProbe p;
    p.label = fns[f].first;
    const double fa = mags[f][mags[f].size() - 2];
    const double fb = mags[f].back();
    const double floor = 1e-300;
    p.order = (fa < floor && fb < floor) ? 0.0 : -std::log(std::max(fa, floor) / std::max(fb, floor)) / std::log(ea / eb);
    p.leading = fb * std::pow(eb, std::round(p.order));
    report.probes.push_back(p);
  }
  return report;
}

}  // namespace ellschub
