#pragma once

// The tower A_n = C[Z/2]^(x)n with identity embeddings, presented on the
// idempotent basis e_w, w a word in {T, S}.

#include "towers/tower.hpp"

namespace towers {

class Z2Tower : public Tower {
 public:
  std::string name() const override { return "z2"; }
  LabelKind label_kind() const override { return LabelKind::word; }
  int algebra_cap() const override { return 4; }

  /// Words of length n, T before S, first letter most significant.
  std::vector<Label> labels(int n) const override;
  Module simple_module(const Label& l) const override;
  Module projective_module(const Label& l) const override { return simple_module(l); }
  /// Multiplicity of a word tuple is the trace of its idempotent.
  GVector decompose_simple(const Module& m) const override;
  GVector decompose_projective(const Module& m) const override { return decompose_simple(m); }
  std::vector<SparseQ> right_coset_reps(int m, int n) const override;
  std::vector<SparseQ> left_coset_reps(int m, int n) const override { return right_coset_reps(m, n); }

 protected:
  Algebra build_algebra(int n) const override;
  std::vector<SparseQ> build_embedding(int m, int n) const override;
};

}  // namespace towers
