#pragma once

// The 0-Hecke tower: T-basis arithmetic, the box elements, eta_I and nu_I,
// simple modules C_I, projective modules M_I, and the combinatorial G0 data.

#include <map>
#include <string>
#include <vector>

#include "towers/combinatorics.hpp"
#include "towers/hopf.hpp"
#include "towers/tower.hpp"

namespace towers {

/// Sparse combination of T_sigma, all sigma of one size.
using HeckeElement = std::map<Permutation, Rational>;

HeckeElement hecke_T(const Permutation& s);
HeckeElement hecke_unit(int n);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b, const Rational& scale = 1);
/// T_i T_s = T_{s_i s} when the value i precedes i+1 in s, else -T_s.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);
/// box_s = box_{i_1} ... box_{i_r} over a reduced word, box_i = 1 + T_i.
HeckeElement box_element(const Permutation& s);
/// T_{omega(mirror I)} box_{alpha(conj I)}.
HeckeElement eta(const Composition& c);
/// T_{alpha(I)} box_{alpha(conj mirror I)}.
HeckeElement nu(const Composition& c);
/// Linear map T_s -> T_{s^-1}; reverses products.
HeckeElement anti_involution(const HeckeElement& x);
std::string hecke_str(const HeckeElement& x);

SparseQ to_sparse(const HeckeElement& x);
HeckeElement from_sparse(const SparseQ& v, int n);

class HeckeTower : public Tower {
 public:
  std::string name() const override { return "hecke0"; }
  LabelKind label_kind() const override { return LabelKind::composition; }
  int algebra_cap() const override { return 5; }

  std::vector<Label> labels(int n) const override;
  /// One-dimensional: T_i acts by -1 for i in D(I), by 0 otherwise.
  Module simple_module(const Label& l) const override;
  /// H_N(0) nu_I on the basis T_s box_{alpha(conj mirror I)}, s in
  /// [alpha(I), omega(I)].
  Module projective_module(const Label& l) const override;
  /// Common-eigenvector filtration.
  GVector decompose_simple(const Module& m) const override;
  std::vector<SparseQ> right_coset_reps(int m, int n) const override;
  std::vector<SparseQ> left_coset_reps(int m, int n) const override;

  /// Basis elements T_s box_{...} of M_I, in the order of the interval.
  std::vector<HeckeElement> projective_basis(const Composition& c) const;
  /// The left ideal H_n(0) x, on a basis chosen greedily from T_s x.
  Module left_ideal(const HeckeElement& x, int n) const;

 protected:
  Algebra build_algebra(int n) const override;
  std::vector<SparseQ> build_embedding(int m, int n) const override;
};

/// sum over w in alpha(I) sh (alpha(J) shifted by |I|) of [C_{C(w)}].
GVector g0_product_shuffle(const Composition& a, const Composition& b);
/// Shuffle product and descent-splitting coproduct.
GradedHopfData hecke_g0_combinatorial(int n_max);
/// K0 constants read off the G0 data through the identity pairing.
GradedHopfData dual_hopf_data(const GradedHopfData& g0, const std::string& name);

}  // namespace towers
