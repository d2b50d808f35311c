#pragma once

// Type A elliptic weight functions W_I, their fixed-point restrictions, and the
// comparison with elliptic Schubert classes.
//
// A partial flag variety is fixed by block sizes k = (k_1, ..., k_m); its fixed
// points are partitions I = (I_1, ..., I_m) of {1..n} with |I_s| = k_s. The
// weight-function variables t^{(s)}_i are named "t.s.i", and t^{(m)}_i = z_i.

#include "ellschub/expr.hpp"
#include "ellschub/lie.hpp"
#include "ellschub/schubert.hpp"

#include <string>
#include <vector>

namespace ellschub {

/// k^{(0)} = 0, k^{(1)}, ..., k^{(m)} = n.
std::vector<int> partial_sums(const std::vector<int>& k);

class BlockPartition {
 public:
  /// Throws DomainError unless the blocks partition {1..n} with the sizes k.
  BlockPartition(std::vector<int> k, std::vector<std::vector<int>> blocks);

  const std::vector<int>& sizes() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int n() const { return static_cast<int>(block_of_.size()); }
  int m() const { return static_cast<int>(k_.size()); }

  /// I_s, 1-based s.
  const std::vector<int>& block(int s) const { return blocks_.at(static_cast<std::size_t>(s - 1)); }
  /// The s with i in I_s.
  int block_of(int i) const { return block_of_.at(static_cast<std::size_t>(i - 1)); }
  /// i^{(s)}_1 < ... < i^{(s)}_{k^{(s)}}: the sorted union I_1 u ... u I_s.
  std::vector<int> union_upto(int s) const;

  /// p_{I,j}(i) = |I_j n {1..i-1}|.
  int p(int j, int i) const;
  /// j(I,s,a): the block containing i^{(s)}_a.
  int j(int s, int a) const;

  /// s_i(I): exchanges i and i+1.
  BlockPartition swapped(int i) const;

  bool operator==(const BlockPartition& o) const { return blocks_ == o.blocks_ && k_ == o.k_; }
  bool operator<(const BlockPartition& o) const { return blocks_ < o.blocks_; }

  /// e.g. "({1,3},{2,4})".
  std::string to_string() const;

 private:
  std::vector<int> k_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// I^0 = ({1..k_1}, {k_1+1..k^{(2)}}, ...).
BlockPartition initial_partition(const std::vector<int>& k);

/// All partitions for k, ordered like the minimal coset representatives (by length).
std::vector<BlockPartition> all_partitions(const std::vector<int>& k);

/// I_s = w({k^{(s-1)}+1, ..., k^{(s)}}); w in one-line notation. Throws DomainError
/// unless w is increasing on every block of positions.
BlockPartition coset_to_partition(const std::vector<int>& k, const std::vector<int>& w);
/// The minimal coset representative in one-line notation.
std::vector<int> partition_to_coset(const BlockPartition& I);

BlockPartition coset_to_partition(const ParabolicSetup& setup, const WeylElement& w);
const WeylElement& partition_to_element(const ParabolicSetup& setup, const BlockPartition& I);

/// Largest n accepted by weight_function; the symmetrizer has prod_s k^{(s)}! terms.
inline constexpr int kMaxWeightFunctionN = 5;

/// Unrestricted W_I, psi factors written as theta(x) delta(x, y) = theta(xy) theta'(1) / theta(y).
/// The normalizing product runs over i != j only; the diagonal contributes a constant
/// power of theta(h).
Expr weight_function(const BlockPartition& I);

/// t^{(s)}_j -> z_{i^{(s)}_j(J)} for s < m.
Expr restrict(const Expr& e, const BlockPartition& J);

/// e_I = prod_{a<b} prod_{i in I_a} prod_{j in I_b} theta(z_j / z_i).
Expr euler_factor(const BlockPartition& I);

/// c_k with W_{I^0}|_{I^0} = c_k e_{I^0}:
/// theta'(1)^{S + S2} theta(h)^{-S2}, S = sum_{s<m} k^{(s)}, S2 = sum_{s<m} C(k^{(s)}, 2).
Expr normalization_constant(const std::vector<int>& k);

/// delta(z_{i+1}/z_i, mu_b h^{p_{I,a}(i)} / (mu_a h^{p_{I,b}(i+1)})) W_I + delta(z_i/z_{i+1}, h) s_i^z[W_I],
/// for i in I_a, i+1 in I_b, a < b. Throws DomainError otherwise.
Expr rmatrix_rhs(const BlockPartition& I, const Expr& weight_I, int i);

NumericComparison rmatrix_check(const BlockPartition& I, int i, const EvalConfig& cfg, int samples = 20,
                                std::uint64_t seed = 0);

/// mu_s -> y_{k^{(s-1)}+1} h^{s - k^{(s-1)}}. Throws DomainError if t-variables remain.
Expr mu_substitution(const Expr& e, const std::vector<int>& k);

/// mu_substitution(W_I|_J) / (e_J c_k), the weight-function side of the main theorem.
Expr weight_class(const Expr& weight_I, const BlockPartition& J);

/// weight_class against the type A recursion entry E(X_I)_J.
NumericComparison main_theorem_check(const Expr& weight_I, const BlockPartition& I, const BlockPartition& J,
                                     const TypeATable& table, const EvalConfig& cfg, int samples = 20,
                                     std::uint64_t seed = 0);
NumericComparison main_theorem_check(const BlockPartition& I, const BlockPartition& J, const EvalConfig& cfg,
                                     int samples = 20, std::uint64_t seed = 0);

/// r_j = block(j) - j, the normalization in which the identity below equals -1.
std::vector<int> block_r_vector(const std::vector<int>& k);

/// p_{I,a}(i) + k^{(a-1)} + r_{w^{-1}(i)} - a, with i in I_a and r = block_r_vector(k).
int combinatorial_constant(const BlockPartition& I, int i);

}  // namespace ellschub
