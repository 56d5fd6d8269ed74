#pragma once

// The tower contract: algebras A_n, embeddings rho_{m,n}, labelled simple and
// projective modules, decomposition hooks. Generic induction, restriction,
// condition checkers and module-level Grothendieck data are built on top.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "towers/algebra.hpp"
#include "towers/hopf.hpp"
#include "towers/report.hpp"

namespace towers {

enum class Group { g0, k0 };

class Tower {
 public:
  virtual ~Tower() = default;

  virtual std::string name() const = 0;
  virtual LabelKind label_kind() const = 0;
  /// Largest n for which A_n is materialized.
  virtual int algebra_cap() const = 0;

  virtual std::vector<Label> labels(int n) const = 0;
  virtual Module simple_module(const Label& l) const = 0;
  virtual Module projective_module(const Label& l) const = 0;

  /// Composition factors of a module over a tensor product of tower
  /// algebras, as label tuples (one label per factor).
  virtual GVector decompose_simple(const Module& m) const = 0;
  /// Indecomposable projective summands of a projective module: the
  /// multiplicity of P_J is dim Hom(M, S_J). Checks dimensions add up.
  virtual GVector decompose_projective(const Module& m) const;

  /// Elements x of A_{m+n} with A_{m+n} = sum x rho(A_m (x) A_n) (right) and
  /// A_{m+n} = sum rho(A_m (x) A_n) x (left).
  virtual std::vector<SparseQ> right_coset_reps(int m, int n) const = 0;
  virtual std::vector<SparseQ> left_coset_reps(int m, int n) const = 0;

  AlgebraPtr algebra(int n) const;
  AlgebraPtr tensor_algebra(const std::vector<int>& degrees) const;
  /// rho_{m,n}: A_m (x) A_n -> A_{m+n}.
  std::shared_ptr<const Embedding> embedding(int m, int n) const;

  /// Test fixture: swaps the images of two source basis elements of
  /// rho_{m,n}. Clears the embedding cache.
  void corrupt_embedding(int m, int n, int a, int b);

  /// Tensor product of labelled simple (or projective) modules.
  Module simple_tuple(const LabelTuple& t) const;
  Module projective_tuple(const LabelTuple& t) const;

 protected:
  virtual Algebra build_algebra(int n) const = 0;
  /// Image of each basis element of A_m (x) A_n (row-major) in A_{m+n}.
  virtual std::vector<SparseQ> build_embedding(int m, int n) const = 0;

  void check_degree(int n) const;

 private:
  struct Corruption {
    int m, n, a, b;
  };
  mutable std::mutex mu_;
  mutable std::map<int, AlgebraPtr> algebras_;
  mutable std::map<std::vector<int>, AlgebraPtr> tensors_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const Embedding>> embeddings_;
  std::optional<Corruption> corruption_;
};

std::unique_ptr<Tower> make_tower(const std::string& name);

// ---------------------------------------------------------------- modules

/// Ind_{A_m (x) A_n}^{A_{m+n}} (M (x) N) for M over A_m and N over A_n.
Module induce(const Tower& t, const Module& m, const Module& n);
/// Ind of a module over A_m (x) A_n.
Module induce_pair(const Tower& t, const Module& mn);
/// Res^{A_{k+l}}_{A_k (x) A_l} M.
Module restrict(const Tower& t, const Module& m, int k);
/// Induction from A_t (x) A_{m-t} (x) A_s (x) A_{n-s} to A_{t+s} (x)
/// A_{m+n-t-s} along (c1,c2,d1,d2) -> rho(c1 (x) d1) (x) rho(c2 (x) d2),
/// applied to ResM (x) ResN with ResM over A_t (x) A_{m-t} and ResN over
/// A_s (x) A_{n-s}.
Module twisted_induce(const Tower& t, const Module& res_m, const Module& res_n);

// ---------------------------------------------------------------- checks

/// A_0 one-dimensional; rho_{m,n} injective, unital, multiplicative and
/// associative for degrees summing to at most n.
Report check_conditions12(const Tower& t, int n);
/// A_{m+n} free of rank |reps| as left and right module over rho(A_m (x) A_n).
Report check_condition3(const Tower& t, int n);
/// Res Ind against the sum of twisted inductions, decomposed by the tower's
/// hooks, for all basis pairs with m+n <= n_max and 0 < k < m+n.
Report check_condition5_modules(const Tower& t, Group g, int n_max);
/// Pairing matrix blocks are identities, the tensor pairing factorizes, and
/// the regular module splits into the indecomposable projectives.
Report check_pairing_modules(const Tower& t, int n_max);

// ---------------------------------------------------------------- data

GradedHopfData module_hopf_data(const Tower& t, Group g, int n_max);
PairingMatrix module_pairing(const Tower& t, int n_max);

/// Runs f(0..count-1) on up to TOWER_MAX_THREADS threads; the first
/// exception is rethrown after all workers stop.
void parallel_for(int count, const std::function<void(int)>& f);

}  // namespace towers
