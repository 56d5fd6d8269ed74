#pragma once

// The tower of symmetric group algebras: exact characters of products of
// symmetric groups, the Frobenius characteristic, and module-level data on
// the permutation basis.

#include <map>
#include <vector>

#include "towers/combinatorics.hpp"
#include "towers/hopf.hpp"
#include "towers/tower.hpp"

namespace towers {

/// chi^lambda(mu) by border-strip removal on beta-sets.
Integer mn_character(const Partition& lambda, const Partition& mu);

using ClassKey = std::vector<Partition>;

/// Class function on S_{d_1} x ... x S_{d_r}, indexed by tuples of cycle
/// types.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(std::vector<int> degrees);

  static ClassFunction irreducible(const std::vector<Partition>& lambdas);
  /// Character of the regular representation of S_n.
  static ClassFunction regular(int n);

  const std::vector<int>& degrees() const { return degrees_; }
  const Rational& operator[](const ClassKey& k) const { return values_.at(k); }
  Rational& operator[](const ClassKey& k) { return values_.at(k); }
  const std::map<ClassKey, Rational>& values() const { return values_; }

  bool operator==(const ClassFunction&) const = default;

 private:
  std::vector<int> degrees_;
  std::map<ClassKey, Rational> values_;
};

/// All class keys for the given degrees, in lexicographic order of the
/// per-factor partition lists.
std::vector<ClassKey> class_keys(const std::vector<int>& degrees);
/// prod z_{mu_i}.
Integer centralizer(const ClassKey& k);

/// sum_mu chi(mu) psi(mu) / z_mu.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b);
/// Induces factors pos, pos+1 into one symmetric group.
ClassFunction induce_factors(const ClassFunction& f, size_t pos);
/// Restricts factor pos to S_k x S_{d-k}: value at (.., a, b, ..) is the
/// value at (.., a u b, ..).
ClassFunction restrict_factor(const ClassFunction& f, size_t pos, int k);
/// Reorders factors: result factor i is factor order[i] of f.
ClassFunction permute_factors(const ClassFunction& f, const std::vector<int>& order);

/// Multiplicities of irreducible tuples. Throws ComputationError when a
/// multiplicity is negative or fractional, or the reconstruction fails.
GVector decompose_into_irreducibles(const ClassFunction& f);

/// Power-sum coefficients.
using SymFunctionP = std::map<Partition, Rational>;
SymFunctionP frobenius_ch(const ClassFunction& f);
SymFunctionP multiply(const SymFunctionP& a, const SymFunctionP& b);

class SymmetricTower : public Tower {
 public:
  std::string name() const override { return "sym"; }
  LabelKind label_kind() const override { return LabelKind::partition; }
  int algebra_cap() const override { return 5; }

  std::vector<Label> labels(int n) const override;
  /// Young's seminormal form.
  Module simple_module(const Label& l) const override;
  Module projective_module(const Label& l) const override { return simple_module(l); }
  GVector decompose_simple(const Module& m) const override;
  GVector decompose_projective(const Module& m) const override { return decompose_simple(m); }
  std::vector<SparseQ> right_coset_reps(int m, int n) const override;
  std::vector<SparseQ> left_coset_reps(int m, int n) const override;

  /// Character of a module over a tensor product of group algebras.
  ClassFunction character(const Module& m) const;

 protected:
  Algebra build_algebra(int n) const override;
  std::vector<SparseQ> build_embedding(int m, int n) const override;
};

/// G0 data by characters (equal to K0: the algebras are semisimple).
GradedHopfData sym_character_hopf_data(int n_max);
/// Condition (5) computed on class functions.
Report sym_condition5_characters(int n_max);

}  // namespace towers
