#pragma once

// Root systems, Weyl groups, parabolic quotients and the divisor multiplicities
// of Schubert varieties in G/P.
//
// Conventions:
//  * Weights, roots and coweights are integer vectors in ambient coordinates
//    (Z^n for type A_{n-1}, Z^r for type C_r). The pairing <weight, coweight>
//    is the standard dot product.
//  * Simple reflections are numbered from 1, as are the letters of reduced words.
//  * A Weyl element is stored as its matrix on the ambient lattice; for type A
//    the permutation w acts by w(e_i) = e_{w(i)}.

#include "ellschub/common.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellschub {

enum class Family { A, C };

std::string to_string(Family f);
Family parse_family(const std::string& s);

class RootSystem {
 public:
  /// Type A_{rank} lives in Z^{rank+1}; type C_{rank} (rank >= 2) in Z^{rank}.
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }

  /// Indexed from 0; simple root i (1-based) is simple_roots()[i-1].
  const std::vector<IntVec>& simple_roots() const { return simple_; }
  const std::vector<IntVec>& simple_coroots() const { return simple_co_; }
  const std::vector<IntVec>& positive_roots() const { return positive_; }

  const IntVec& simple_root(int i) const;
  const IntVec& simple_coroot(int i) const;

  /// 2 beta / (beta, beta) for any root beta.
  IntVec coroot(const IntVec& root) const;
  bool is_root(const IntVec& v) const;
  bool is_positive_root(const IntVec& v) const;
  bool is_negative_root(const IntVec& v) const;

  /// s_beta(x) = x - <x, beta^vee> beta.
  IntVec reflect(const IntVec& x, const IntVec& root) const;

  /// Coefficients of v in the basis of simple roots; nullopt outside their span.
  std::optional<std::vector<Rational>> simple_coordinates(const IntVec& v) const;

  /// <alpha_i, alpha_j^vee>.
  std::vector<std::vector<int>> cartan_matrix() const;

 private:
  RootSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<IntVec> simple_;
  std::vector<IntVec> simple_co_;
  std::vector<IntVec> positive_;
};

/// build_root_system(family, rank).
RootSystem build_root_system(Family family, int rank);

/// Sequence of simple reflection indices (1-based), product s_{j_1} ... s_{j_l}.
using ReducedWord = std::vector<int>;

class WeylElement {
 public:
  const std::vector<int>& matrix() const { return matrix_; }
  int dim() const { return dim_; }
  int length() const { return length_; }
  const ReducedWord& word() const { return word_; }
  /// Position inside the owning WeylGroup.
  std::size_t index() const { return index_; }

  IntVec act(const IntVec& x) const;
  std::vector<Rational> act(const std::vector<Rational>& x) const;

  bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

 private:
  friend class WeylGroup;
  std::vector<int> matrix_;
  int dim_ = 0;
  int length_ = 0;
  ReducedWord word_;
  std::size_t index_ = 0;
};

enum class BruhatRelation { Less, Equal, Greater, Incomparable };

std::string to_string(BruhatRelation r);

/// The full finite Weyl group, enumerated once. Elements are ordered by length and
/// then by reduced word, so index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& simple_reflection(int i) const;
  const WeylElement& longest() const;

  const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
  const WeylElement& inverse(const WeylElement& a) const;
  /// Product of the letters; the word need not be reduced.
  const WeylElement& from_word(const std::vector<int>& letters) const;
  /// s_beta for a root beta.
  const WeylElement& reflection(const IntVec& root) const;
  const WeylElement& from_matrix(const std::vector<int>& matrix) const;

  /// u <= w in Bruhat order (subword property against w's stored reduced word).
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;
  BruhatRelation compare(const WeylElement& u, const WeylElement& w) const;

 private:
  std::size_t left_mult(int letter, std::size_t idx) const;
  std::size_t right_mult(std::size_t idx, int letter) const;

  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::size_t>> right_table_;  // [idx][letter-1]
  std::vector<std::vector<std::size_t>> left_table_;
  std::vector<std::vector<bool>> below_;  // below_[w][u] <=> u <= w
};

struct DynamicalVariable {
  std::string name;
  /// The W_P-invariant weight b with var = h^{x} when lambda = sum x b.
  IntVec weight;
};

class ParabolicSetup {
 public:
  ParabolicSetup(std::shared_ptr<const WeylGroup> group, std::vector<int> levi);

  /// Type A_{n-1} with the parabolic of the block sizes k (sum n).
  static ParabolicSetup type_a_blocks(const std::vector<int>& k);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const RootSystem& root_system() const { return group_->root_system(); }

  /// Simple root indices S generating the Levi, sorted and 1-based.
  const std::vector<int>& levi() const { return levi_; }
  bool in_levi(int i) const;

  const std::vector<std::size_t>& levi_group() const { return levi_group_; }
  /// W^P, ordered by length.
  const std::vector<std::size_t>& min_coset_reps() const { return min_reps_; }
  bool is_min_rep(const WeylElement& w) const;
  /// Minimal-length representative of w W_P.
  const WeylElement& coset_rep(const WeylElement& w) const;
  /// Position of w in min_coset_reps(); throws DomainError for w outside W^P.
  std::size_t quotient_position(const WeylElement& w) const;

  const std::vector<Rational>& rho() const { return rho_; }
  const std::vector<Rational>& rho_levi() const { return rho_levi_; }
  /// <rho_bar, alpha_i^vee> = [i in S]; in type A normalized so the last entry is 0.
  const IntVec& rho_bar() const { return rho_bar_; }

  const std::vector<DynamicalVariable>& dynamical_basis() const { return dyn_; }

  /// Type A only: consecutive blocks of {1..n} (1-based positions).
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  /// Negative roots of the Levi, R^-_P.
  std::vector<IntVec> levi_negative_roots() const;

  /// Short human-readable label, e.g. "A3 S={1,3}".
  std::string label() const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<int> levi_;
  std::vector<std::size_t> levi_group_;
  std::vector<std::size_t> min_reps_;
  std::vector<std::size_t> coset_rep_of_;
  std::vector<long> quotient_pos_;
  std::vector<Rational> rho_;
  std::vector<Rational> rho_levi_;
  IntVec rho_bar_;
  std::vector<DynamicalVariable> dyn_;
};

ParabolicSetup parabolic_setup(const RootSystem& rs, std::vector<int> levi);

/// Bruhat comparison of u against w.
BruhatRelation weyl_compare(const WeylGroup& group, const WeylElement& u, const WeylElement& w);

struct Cover {
  std::size_t v;  ///< group index of the covered element
  IntVec beta;    ///< positive root with v = s_beta w
};

/// All v in W^P with v -> w, with the root beta such that v = s_beta w.
std::vector<Cover> covers_in_WP(const ParabolicSetup& setup, const WeylElement& w);

/// m^P_{w,v} = 1 - <w rho_bar, beta^vee> for a cover v -> w.
int multiplicity_m(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v);

struct GammaEntry {
  IntVec gamma;          ///< s_{j_l} ... s_{j_{i+1}} alpha_{j_i}
  IntVec gamma_coroot;
  IntVec beta;           ///< s_{j_1} ... s_{j_{i-1}} alpha_{j_i}
  IntVec beta_coroot;
};

/// Per-letter data of a reduced word; throws DomainError on a non-reduced word.
std::vector<GammaEntry> gamma_data(const WeylGroup& group, const ReducedWord& word);

/// Divisor coefficients m^P_{w,i} = 1 + <rho_bar, gamma_i^vee> along the word.
std::vector<int> bsdh_multiplicities(const ParabolicSetup& setup, const ReducedWord& word);

struct TangentWeights {
  std::vector<IntVec> schubert;  ///< weights of T_w X^P_w: R^+ cap w R^-
  std::vector<IntVec> ambient;   ///< weights of T_w G/P: w(R^- \ R^-_P)
};

TangentWeights tangent_weights(const ParabolicSetup& setup, const WeylElement& w);

/// Type A helpers. One-line notation, 1-based values.
std::vector<int> permutation_of(const WeylElement& w);
const WeylElement& element_of_permutation(const WeylGroup& group, const std::vector<int>& perm);
std::string one_line(const WeylElement& w);

std::string format_word(const ReducedWord& word);
std::string format_vector(const IntVec& v);

}  // namespace ellschub
