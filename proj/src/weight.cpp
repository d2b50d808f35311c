#include "ellschub/weight.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ellschub {

std::vector<int> partial_sums(const std::vector<int>& k) {
  std::vector<int> out{0};
  for (int x : k) out.push_back(out.back() + x);
  return out;
}

// ---------------------------------------------------------------------------
// BlockPartition

BlockPartition::BlockPartition(std::vector<int> k, std::vector<std::vector<int>> blocks)
    : k_(std::move(k)), blocks_(std::move(blocks)) {
  if (k_.size() != blocks_.size() || k_.empty()) throw DomainError("partition: block count differs from k");
  const int n = std::accumulate(k_.begin(), k_.end(), 0);
  block_of_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    auto& b = blocks_[s];
    if (static_cast<int>(b.size()) != k_[s]) throw DomainError("partition: block " + std::to_string(s + 1) + " has the wrong size");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 1 || i > n || block_of_[static_cast<std::size_t>(i - 1)] != 0)
        throw DomainError("partition: blocks must partition {1.." + std::to_string(n) + "}");
      block_of_[static_cast<std::size_t>(i - 1)] = static_cast<int>(s) + 1;
    }
  }
}

std::vector<int> BlockPartition::union_upto(int s) const {
  std::vector<int> out;
  for (int j = 1; j <= s; ++j) out.insert(out.end(), block(j).begin(), block(j).end());
  std::sort(out.begin(), out.end());
  return out;
}

int BlockPartition::p(int j, int i) const {
  const auto& b = block(j);
  return static_cast<int>(std::lower_bound(b.begin(), b.end(), i) - b.begin());
}

int BlockPartition::j(int s, int a) const { return block_of(union_upto(s).at(static_cast<std::size_t>(a - 1))); }

BlockPartition BlockPartition::swapped(int i) const {
  if (i < 1 || i >= n()) throw DomainError("swapped: index out of range");
  auto blocks = blocks_;
  for (auto& b : blocks)
    for (int& x : b) {
      if (x == i) {
        x = i + 1;
      } else if (x == i + 1) {
        x = i;
      }
    }
  return BlockPartition(k_, std::move(blocks));
}

std::string BlockPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    os << (s ? ",{" : "{");
    for (std::size_t a = 0; a < blocks_[s].size(); ++a) os << (a ? "," : "") << blocks_[s][a];
    os << "}";
  }
  os << ")";
  return os.str();
}

BlockPartition initial_partition(const std::vector<int>& k) {
  const auto ks = partial_sums(k);
  std::vector<std::vector<int>> blocks;
  for (std::size_t s = 0; s < k.size(); ++s) {
    std::vector<int> b(static_cast<std::size_t>(k[s]));
    std::iota(b.begin(), b.end(), ks[s] + 1);
    blocks.push_back(std::move(b));
  }
  return BlockPartition(k, std::move(blocks));
}

BlockPartition coset_to_partition(const std::vector<int>& k, const std::vector<int>& w) {
  const auto ks = partial_sums(k);
  if (static_cast<int>(w.size()) != ks.back()) throw DomainError("coset_to_partition: permutation has the wrong size");
  std::vector<std::vector<int>> blocks;
  for (std::size_t s = 0; s < k.size(); ++s) {
    std::vector<int> b(w.begin() + ks[s], w.begin() + ks[s + 1]);
    if (!std::is_sorted(b.begin(), b.end())) throw DomainError("coset_to_partition: permutation is not in W^P");
    blocks.push_back(std::move(b));
  }
  return BlockPartition(k, std::move(blocks));
}

std::vector<int> partition_to_coset(const BlockPartition& I) {
  std::vector<int> w;
  for (const auto& b : I.blocks()) w.insert(w.end(), b.begin(), b.end());
  return w;
}

BlockPartition coset_to_partition(const ParabolicSetup& setup, const WeylElement& w) {
  if (!setup.is_min_rep(w)) throw DomainError("coset_to_partition: element is not in W^P");
  return coset_to_partition(setup.block_sizes(), permutation_of(w));
}

const WeylElement& partition_to_element(const ParabolicSetup& setup, const BlockPartition& I) {
  return element_of_permutation(setup.group(), partition_to_coset(I));
}

std::vector<BlockPartition> all_partitions(const std::vector<int>& k) {
  std::vector<BlockPartition> out;
  for (const auto& w : TypeATable::enumerate_cosets(k)) out.push_back(coset_to_partition(k, w));
  return out;
}

// ---------------------------------------------------------------------------
// Weight functions

namespace {

Monomial t_mono(int s, int i, int m) { return Monomial::var(s == m ? z_var(i) : t_var(s, i)); }

void permutations_product(const std::vector<int>& ks, std::size_t level, std::vector<std::vector<int>>& current,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (level == current.size()) {
    visit(current);
    return;
  }
  auto& perm = current[level];
  std::iota(perm.begin(), perm.end(), 1);
  do {
    permutations_product(ks, level + 1, current, visit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::iota(perm.begin(), perm.end(), 1);
}

}  // namespace

Expr weight_function(const BlockPartition& I) {
  const int n = I.n();
  const int m = I.m();
  if (n > kMaxWeightFunctionN) throw ConfigError("weight functions are limited to n <= " + std::to_string(kMaxWeightFunctionN));
  const auto ks = partial_sums(I.sizes());
  const Monomial h = Monomial::var(kH);

  std::vector<Factor> u;
  for (int s = 1; s < m; ++s) {
    const auto us = I.union_upto(s);
    const auto us1 = I.union_upto(s + 1);
    for (int a = 1; a <= ks[s]; ++a) {
      const int ia = us[static_cast<std::size_t>(a - 1)];
      const Monomial ta = t_mono(s, a, m);
      for (int c = 1; c <= ks[s + 1]; ++c) {
        const int ic = us1[static_cast<std::size_t>(c - 1)];
        const Monomial x = t_mono(s + 1, c, m) / ta;
        if (ic < ia) {
          u.push_back(Factor::theta(x * h));
          u.push_back(Factor::theta_prime());
          u.push_back(Factor::theta(h, -1));
        } else if (ic == ia) {
          const int j = I.block_of(ia);
          const Monomial y = Monomial::var(kH, 1 + I.p(j, ia) - I.p(s + 1, ia)) * Monomial::var(mu_var(s + 1)) /
                             Monomial::var(mu_var(j));
          u.push_back(Factor::theta(x * y));
          u.push_back(Factor::theta_prime());
          u.push_back(Factor::theta(y, -1));
        } else {
          u.push_back(Factor::theta(x));
        }
      }
      for (int b = a + 1; b <= ks[s]; ++b) {
        const Monomial r = t_mono(s, b, m) / ta;
        u.push_back(Factor::theta(h * r));
        u.push_back(Factor::theta(r, -1));
      }
    }
  }
  const Expr base = Expr::product(u);

  std::vector<int> levels(ks.begin() + 1, ks.begin() + m);
  std::vector<std::vector<int>> perms;
  for (int size : levels) perms.emplace_back(static_cast<std::size_t>(size));
  Expr sym;
  permutations_product(levels, 0, perms, [&](const std::vector<std::vector<int>>& p) {
    std::map<std::string, Monomial> map;
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t a = 0; a < p[s].size(); ++a)
        map.emplace(t_var(static_cast<int>(s) + 1, static_cast<int>(a) + 1),
                    Monomial::var(t_var(static_cast<int>(s) + 1, p[s][a])));
    sym += substitute(base, map);
  });

  std::vector<Factor> pre;
  for (int s = 1; s < m; ++s)
    for (int i = 1; i <= ks[s]; ++i)
      for (int j = 1; j <= ks[s]; ++j)
        if (i != j) pre.push_back(Factor::theta(h * t_mono(s, j, m) / t_mono(s, i, m), -1));
  return canonicalize(Expr::product(pre) * sym);
}

Expr restrict(const Expr& e, const BlockPartition& J) {
  std::map<std::string, Monomial> map;
  for (int s = 1; s < J.m(); ++s) {
    const auto us = J.union_upto(s);
    for (std::size_t a = 0; a < us.size(); ++a)
      map.emplace(t_var(s, static_cast<int>(a) + 1), Monomial::var(z_var(us[a])));
  }
  return canonicalize(substitute(e, map));
}

Expr euler_factor(const BlockPartition& I) {
  std::vector<Factor> fs;
  for (int a = 1; a <= I.m(); ++a)
    for (int b = a + 1; b <= I.m(); ++b)
      for (int i : I.block(a))
        for (int j : I.block(b)) fs.push_back(Factor::theta(Monomial::var(z_var(j)) / Monomial::var(z_var(i))));
  return canonicalize(Expr::product(std::move(fs)));
}

Expr normalization_constant(const std::vector<int>& k) {
  const auto ks = partial_sums(k);
  int s1 = 0;
  int s2 = 0;
  for (std::size_t s = 1; s + 1 < ks.size(); ++s) {
    s1 += ks[s];
    s2 += ks[s] * (ks[s] - 1) / 2;
  }
  std::vector<Factor> fs;
  if (s1 + s2 != 0) fs.push_back(Factor::theta_prime(s1 + s2));
  if (s2 != 0) fs.push_back(Factor::theta(Monomial::var(kH), -s2));
  return Expr::product(std::move(fs));
}

Expr rmatrix_rhs(const BlockPartition& I, const Expr& weight_I, int i) {
  if (i < 1 || i >= I.n()) throw DomainError("rmatrix: index out of range");
  const int a = I.block_of(i);
  const int b = I.block_of(i + 1);
  if (a >= b) throw DomainError("rmatrix: requires i in I_a, i+1 in I_b with a < b");
  const Monomial zi = Monomial::var(z_var(i));
  const Monomial zj = Monomial::var(z_var(i + 1));
  const Monomial y = Monomial::var(mu_var(b)) * Monomial::var(kH, I.p(a, i) - I.p(b, i + 1)) / Monomial::var(mu_var(a));
  return Expr::factor(Factor::delta(zj / zi, y)) * weight_I +
         Expr::factor(Factor::delta(zi / zj, Monomial::var(kH))) * swap_z(weight_I, i);
}

NumericComparison rmatrix_check(const BlockPartition& I, int i, const EvalConfig& cfg, int samples, std::uint64_t seed) {
  const Expr rhs = rmatrix_rhs(I, weight_function(I), i);
  return numeric_equal(weight_function(I.swapped(i)), rhs, cfg, samples, seed);
}

Expr mu_substitution(const Expr& e, const std::vector<int>& k) {
  for (const auto& v : variables(e))
    if (v.rfind("t.", 0) == 0) throw DomainError("mu_substitution: unrestricted variable " + v);
  const auto ks = partial_sums(k);
  std::map<std::string, Monomial> map;
  for (int s = 1; s <= static_cast<int>(k.size()); ++s) {
    const int prev = ks[static_cast<std::size_t>(s - 1)];
    map.emplace(mu_var(s), Monomial::var(y_var(prev + 1)) * Monomial::var(kH, s - prev));
  }
  return substitute(e, map);
}

Expr weight_class(const Expr& weight_I, const BlockPartition& J) {
  const Expr restricted = mu_substitution(restrict(weight_I, J), J.sizes());
  std::vector<Factor> inv;
  const Expr denominator = euler_factor(J) * normalization_constant(J.sizes());
  for (const auto& t : denominator.terms())
    for (const auto& f : t.factors) {
      Factor g = f;
      g.power = -g.power;
      inv.push_back(g);
    }
  return canonicalize(restricted * Expr::product(std::move(inv)));
}

NumericComparison main_theorem_check(const Expr& weight_I, const BlockPartition& I, const BlockPartition& J,
                                     const TypeATable& table, const EvalConfig& cfg, int samples, std::uint64_t seed) {
  const Expr& cls = table.at(partition_to_coset(I), partition_to_coset(J));
  return numeric_equal(weight_class(weight_I, J), cls, cfg, samples, seed);
}

NumericComparison main_theorem_check(const BlockPartition& I, const BlockPartition& J, const EvalConfig& cfg,
                                     int samples, std::uint64_t seed) {
  return main_theorem_check(weight_function(I), I, J, TypeATable(I.sizes()), cfg, samples, seed);
}

std::vector<int> block_r_vector(const std::vector<int>& k) {
  std::vector<int> r;
  for (std::size_t s = 0; s < k.size(); ++s)
    for (int a = 0; a < k[s]; ++a) r.push_back(static_cast<int>(s) + 1 - (static_cast<int>(r.size()) + 1));
  return r;
}

int combinatorial_constant(const BlockPartition& I, int i) {
  const auto ks = partial_sums(I.sizes());
  const auto r = block_r_vector(I.sizes());
  const auto w = partition_to_coset(I);
  const int a = I.block_of(i);
  const int winv = static_cast<int>(std::find(w.begin(), w.end(), i) - w.begin()) + 1;
  return I.p(a, i) + ks[static_cast<std::size_t>(a - 1)] + r[static_cast<std::size_t>(winv - 1)] - a;
}

}  // namespace ellschub
