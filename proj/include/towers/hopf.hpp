#pragma once

// Graded Grothendieck-group data: labels, integer vectors over label tuples,
// product/coproduct structure constants and the identity checkers run on them.

#include <map>
#include <string>
#include <vector>

#include "towers/combinatorics.hpp"
#include "towers/exact.hpp"
#include "towers/report.hpp"

namespace towers {

enum class LabelKind { partition = 0, composition = 1, word = 2 };

/// Basis symbol [V] of a Grothendieck group. For words the letters are 0 (T)
/// and 1 (S).
struct Label {
  LabelKind kind = LabelKind::composition;
  std::vector<int> parts;

  static Label of(const Partition& p) { return {LabelKind::partition, p.parts()}; }
  static Label of(const Composition& c) { return {LabelKind::composition, c.parts()}; }
  static Label word(std::vector<int> letters) { return {LabelKind::word, std::move(letters)}; }
  /// Parses "2,1", "(2,1)", "TS" or "()" according to kind.
  static Label parse(LabelKind kind, const std::string& text);
  static Label empty(LabelKind kind) { return {kind, {}}; }

  int degree() const;
  Partition partition() const { return Partition(parts); }
  Composition composition() const { return Composition(parts); }
  std::string str() const;

  /// Degree first; within a degree partitions run (n), (n-1,1), ...,
  /// compositions by descent set, words lexicographically with T < S.
  std::strong_ordering operator<=>(const Label& rhs) const;
  bool operator==(const Label& rhs) const = default;
};

using LabelTuple = std::vector<Label>;
std::string tuple_str(const LabelTuple& t);

/// Finitely supported integer combination of label tuples of one arity.
using GVector = std::map<LabelTuple, Integer>;

void add_term(GVector& v, const LabelTuple& t, const Integer& c);
GVector add(const GVector& a, const GVector& b, const Integer& scale = 1);
GVector basis_vector(const LabelTuple& t);
GVector basis_vector(const Label& l);
/// Concatenates the tuples of a and b termwise.
GVector tensor(const GVector& a, const GVector& b);
std::string gv_str(const GVector& v);
Json gv_json(const GVector& v);

class GradedHopfData {
 public:
  GradedHopfData(std::string name, int max_degree, std::vector<std::vector<Label>> basis);

  const std::string& name() const { return name_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Label>& basis(int n) const;
  const Label& unit() const { return basis_.at(0).at(0); }

  /// Constants for a*b, stored as arity-1 vectors.
  void set_product(const Label& a, const Label& b, GVector value);
  /// All splittings of g, stored as one arity-2 vector.
  void set_coproduct(const Label& g, GVector value);

  const GVector& product(const Label& a, const Label& b) const;
  const GVector& coproduct(const Label& g) const;

  Integer counit(const Label& l) const { return l.degree() == 0 ? 1 : 0; }

  /// Bilinear product of arity-1 vectors.
  GVector multiply(const GVector& x, const GVector& y) const;
  /// Multiplies positions pos, pos+1 of every tuple.
  GVector multiply_at(const GVector& x, size_t pos) const;
  /// Replaces position pos by its coproduct.
  GVector comultiply_at(const GVector& x, size_t pos) const;
  /// Applies the counit at position pos, dropping that position.
  GVector counit_at(const GVector& x, size_t pos) const;
  /// (x1 (x) x2 ...) * (y1 (x) y2 ...) = x1 y1 (x) x2 y2 ... for equal arities.
  GVector multiply_tensors(const GVector& x, const GVector& y) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

  Json to_json() const;

 private:
  std::string name_;
  int max_degree_;
  std::vector<std::vector<Label>> basis_;
  std::map<std::pair<Label, Label>, GVector> product_;
  std::map<Label, GVector> coproduct_;
};

/// Per degree, rows are K0 labels and columns G0 labels.
struct PairingMatrix {
  std::vector<std::vector<std::vector<Integer>>> blocks;

  static PairingMatrix identity(const GradedHopfData& k0, const GradedHopfData& g0, int n_max);
  static PairingMatrix zero(const GradedHopfData& k0, const GradedHopfData& g0, int n_max);
};

/// Unit, counit, associativity, coassociativity and compatibility of the
/// product with the coproduct, on basis elements of total degree <= n.
Report check_bialgebra(const GradedHopfData& h, int n);

/// Antipode by the recursion s(x) = -sum s(x') x'' over the splittings of x
/// other than x (x) 1. Throws ComputationError when sum s(x1) x2 != e(x) 1.
std::map<Label, GVector> antipode(const GradedHopfData& h, int n);
/// Both convolution identities for every label, plus s(s(x)) = x when the
/// data is commutative or cocommutative.
Report check_antipode(const GradedHopfData& h, int n);

/// Identities of the K0 x G0 pairing on basis elements of total degree <= n.
/// Throws UsageError when a block shape does not match the bases.
Report check_duality(const GradedHopfData& g0, const GradedHopfData& k0, const PairingMatrix& p, int n);

/// Res_k Ind(x (x) y) against the three-case formula in which only one side
/// is split.
Report check_asas(const GradedHopfData& h, int n);

/// The Mackey-type identity Delta(xy) = Delta(x) Delta(y) split by degree k,
/// one cell per (x, y, k) with 0 < k < |x|+|y|.
Report check_compatibility_cells(const GradedHopfData& h, int n);

}  // namespace towers
