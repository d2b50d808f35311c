#pragma once

// Elliptic classes E(X^P_w, lambda)_v of Schubert varieties, computed by
// Bott-Samelson localization and by the cover recursion, plus the axiom checks.

#include "ellschub/expr.hpp"
#include "ellschub/lie.hpp"

#include <map>
#include <string>
#include <vector>

namespace ellschub {

/// A symbolic W_P-invariant weight lambda, possibly shifted by an integral weight.
/// h^{<lambda + shift, c>} = prod_k var_k^{<b_k, c>} * h^{<shift, c>}.
class LambdaSymbol {
 public:
  explicit LambdaSymbol(const ParabolicSetup& setup);

  /// lambda - rho_bar of the setup this symbol was built from.
  LambdaSymbol minus_rho_bar() const;

  Monomial pair(const IntVec& coweight) const;

  const std::vector<DynamicalVariable>& basis() const { return basis_; }
  const IntVec& shift() const { return shift_; }

 private:
  std::vector<DynamicalVariable> basis_;
  IntVec rho_bar_;
  IntVec shift_;
};

/// prod_i delta(e^{-v_{[1,i]} alpha_{j_i}}, psi(i)), psi(i) = h for kept letters and
/// h^{<lambda, gamma_i^vee>} otherwise. Pass lambda - rho_bar when targeting X^P.
Expr bsdh_restriction(const WeylGroup& group, const ReducedWord& word, const std::vector<bool>& keep,
                      const LambdaSymbol& lambda);

struct LocalizationSummand {
  std::vector<bool> keep;
  Expr value;
};

/// The subwords of w's stored reduced word whose product lies in v W_P, each with
/// its restriction at lambda - rho_bar.
std::vector<LocalizationSummand> localization_summands(const ParabolicSetup& setup, const WeylElement& w,
                                                       const WeylElement& v);

/// Canonical sum of localization_summands.
Expr class_localization(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v);

enum class Provenance { Localization, Recursion };

std::string to_string(Provenance p);

/// Entries over W^P x W^P, rows and columns in min_coset_reps() order.
class ClassTable {
 public:
  ClassTable(ParabolicSetup setup, Provenance provenance, std::vector<std::vector<Expr>> entries);

  const ParabolicSetup& setup() const { return setup_; }
  Provenance provenance() const { return provenance_; }
  std::size_t size() const { return entries_.size(); }

  /// Throws DomainError when w or v is outside W^P.
  const Expr& at(const WeylElement& w, const WeylElement& v) const;
  const Expr& at_position(std::size_t w, std::size_t v) const { return entries_.at(w).at(v); }

 private:
  ParabolicSetup setup_;
  Provenance provenance_;
  std::vector<std::vector<Expr>> entries_;
};

ClassTable localization_table(const ParabolicSetup& setup);

/// Which left descent s_alpha of w the recursion peels off.
enum class DescentRule { Smallest, Largest };

/// Rows for every w in W^P built from E(X_1)_v = [v = 1] by
///   E(X_{s w})_{[v]} = delta(e^{-a}, h^{<lambda, w^{-1} a^vee>}) E(X_w)_{[v]} + delta(e^a, h) s^z[E(X_w)_{[s v]}]
/// with lambda as given; the usual parabolic class takes LambdaSymbol(setup).minus_rho_bar().
ClassTable recursion_table(const ParabolicSetup& setup, const LambdaSymbol& lambda,
                           DescentRule rule = DescentRule::Smallest);

/// Parabolic recursion at lambda - rho_bar.
ClassTable recursion_table(const ParabolicSetup& setup, DescentRule rule = DescentRule::Smallest);

Expr class_recursion(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v);

// ---------------------------------------------------------------------------
// Type A in y / h variables

/// r_i - r_{i+1} = 1 inside a block, 0 across blocks, r_n = 0.
std::vector<int> r_vector(const std::vector<int>& k);

/// The recursion written with permutations, z_i, h and y_j (y shared inside a block,
/// named after the block's first position).
class TypeATable {
 public:
  explicit TypeATable(std::vector<int> k);

  /// One-line minimal coset representatives for k, ordered by length.
  static std::vector<std::vector<int>> enumerate_cosets(const std::vector<int>& k);

  const std::vector<int>& blocks() const { return k_; }
  /// Minimal coset representatives in one-line notation, ordered by length.
  const std::vector<std::vector<int>>& cosets() const { return cosets_; }

  /// Throws DomainError for permutations outside W^P.
  const Expr& at(const std::vector<int>& w, const std::vector<int>& v) const;

 private:
  std::size_t position(const std::vector<int>& w) const;

  std::vector<int> k_;
  std::vector<std::vector<int>> cosets_;
  std::map<std::vector<int>, std::size_t> pos_;
  std::vector<std::vector<Expr>> rows_;
};

Expr typeA_recursion(const std::vector<int>& k, const std::vector<int>& w, const std::vector<int>& v);

/// mu_s -> y_{first position of block s}: the renaming under which type A classes
/// from recursion_table agree with TypeATable.
std::map<std::string, Monomial> mu_to_y(const ParabolicSetup& setup);

// ---------------------------------------------------------------------------
// Checks

/// Borel classes E(X^B_w, lambda_P - rho_bar_P) over all of W, lambda_P in the
/// dynamical variables of the parabolic setup.
ClassTable shifted_borel_table(const ParabolicSetup& setup);

/// E(X^P_w)_v against sum_{u in W_P} E(X^B_w, lambda - rho_bar)_{vu}.
NumericComparison pushforward_check(const ClassTable& parabolic, const ClassTable& shifted_borel,
                                    const WeylElement& w, const WeylElement& v, const EvalConfig& cfg,
                                    int samples = 20, std::uint64_t seed = 0);
NumericComparison pushforward_check(const ParabolicSetup& setup, const WeylElement& w, const WeylElement& v,
                                    const EvalConfig& cfg, int samples = 20, std::uint64_t seed = 0);

/// prod over beta in R^+ cap w R^- of delta(e^beta, h).
Expr diagonal_class(const ParabolicSetup& setup, const WeylElement& w);

/// Exact canonical match of the diagonal entry at w.
bool normalization_check(const ClassTable& table, const WeylElement& w);

/// Every entry with v not <= w is the zero Expr.
bool triangularity_check(const ClassTable& table);

struct PoleProbe {
  std::string label;
  double order = 0.0;   ///< fitted exponent k with |f| ~ C eps^{-k}
  double leading = 0.0; ///< |f(eps)| eps^{k} at the smallest eps, k rounded
};

struct GkmReport {
  std::string w;
  std::string v1;
  std::string v2;
  IntVec alpha;
  std::vector<double> eps;
  std::vector<PoleProbe> probes;  ///< E_{v1}, E_{v2}, difference, sum
};

/// Moves a generic point towards the wall e^alpha = 1 and fits pole orders.
/// v1 = v2 s_alpha reduced to W^P. Diagnostic only.
GkmReport gkm_probe(const ClassTable& table, const WeylElement& w, const WeylElement& v2, const IntVec& alpha,
                    const EvalConfig& cfg, std::uint64_t seed = 0);

}  // namespace ellschub
