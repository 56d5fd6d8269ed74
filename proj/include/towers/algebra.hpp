#pragma once

// Finite-dimensional algebras given by a multiplication table, modules given
// by generator matrices, and the quotient construction behind induction.

#include <memory>
#include <string>
#include <vector>

#include "towers/exact.hpp"

namespace towers {

struct Generator {
  std::string label;
  int factor = 0;  // tensor factor the generator lives in
  SparseQ element;
};

/// An algebra on an ordered basis. Tensor products of tower algebras keep
/// the list of factor degrees; a single A_n has degrees {n}.
class Algebra {
 public:
  Algebra(std::vector<int> degrees, std::vector<std::string> basis_labels, SparseQ unit);

  const std::vector<int>& degrees() const { return degrees_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const SparseQ& unit() const { return unit_; }

  const std::vector<Generator>& generators() const { return generators_; }
  /// Basis element i equals the product of the generators monomial(i)[0]
  /// monomial(i)[1] ... (indices into generators()).
  const std::vector<int>& monomial(int i) const { return monomials_.at(i); }

  const SparseQ& product(int i, int j) const { return table_[static_cast<size_t>(i) * dim() + j]; }
  SparseQ multiply(const SparseQ& x, const SparseQ& y) const;

  void set_product(int i, int j, SparseQ value) { table_[static_cast<size_t>(i) * dim() + j] = std::move(value); }
  void add_generator(Generator g) { generators_.push_back(std::move(g)); }
  void set_monomial(int i, std::vector<int> word) { monomials_.at(i) = std::move(word); }

  /// Unit laws, monomial consistency, and associativity (x y) g = x (y g)
  /// for basis x, y and generators g, which implies full associativity
  /// because the generators span the algebra multiplicatively.
  void verify() const;

 private:
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
  SparseQ unit_;
  std::vector<SparseQ> table_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> monomials_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A (x) B on the row-major basis (i, j) -> i * dim B + j.
Algebra tensor_product(const Algebra& a, const Algebra& b);

/// Algebra homomorphism on basis elements: images[i] is the image of source
/// basis element i.
struct Embedding {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<SparseQ> images;

  SparseQ apply(const SparseQ& x) const;
};

class Module {
 public:
  Module() = default;
  Module(AlgebraPtr algebra, int dim, std::vector<Matrix> generator_actions);

  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& generator_actions() const { return gens_; }

  Matrix basis_action(int i) const;
  Matrix action(const SparseQ& x) const;

  /// Checks that the basis action is multiplicative: g . b = (g b) for every
  /// generator g and basis element b (only short monomials for large cases).
  void verify() const;

 private:
  AlgebraPtr algebra_;
  int dim_ = 0;
  std::vector<Matrix> gens_;
};

/// Left regular module.
Module regular_module(const AlgebraPtr& a);
/// Outer tensor product over `algebra`, which must be the tensor product of
/// the two acting algebras (generators concatenated).
Module tensor_modules(const AlgebraPtr& algebra, const Module& m, const Module& n);

/// Module over emb.source obtained by acting through the embedding.
Module restrict_along(const Embedding& emb, const Module& m);

/// C (x)_B W as an explicit quotient of C (x) W by the relations
/// a E(x) (x) w - a (x) x w over basis a, generators x of B and basis w.
/// `expected_dim` (when >= 0) is asserted.
Module induce_along(const Embedding& emb, const Module& w, int expected_dim = -1);

/// Basis of Hom_A(p, m): matrices f (dim m x dim p) with f p(g) = m(g) f.
std::vector<Matrix> hom_space(const Module& p, const Module& m);
int pairing_dim_hom(const Module& p, const Module& m);

/// True iff an invertible intertwiner exists. Throws ComputationError when
/// the search would exceed its point budget.
bool module_isomorphic(const Module& m, const Module& n);

/// Coordinates with respect to a list of linearly independent vectors.
class Coordinates {
 public:
  Coordinates(const std::vector<SparseQ>& basis, int ambient_dim);
  bool independent() const { return independent_; }
  int size() const { return k_; }
  /// Throws ComputationError when x is outside the span.
  Vector coordinates(const SparseQ& x) const;

 private:
  int ambient_;
  int k_;
  bool independent_ = true;
  Echelon ech_;
};

}  // namespace towers
