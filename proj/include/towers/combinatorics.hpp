#pragma once

// Type-A index combinatorics: permutations in one-line notation, compositions
// and their ribbons, partitions, shuffles of words.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace towers {

/// A permutation of {1..n} in one-line notation. Composition is
/// (s*t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  /// Accepts "21534" (single digits) or "2,1,5,3,4".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& window() const { return w_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  int length() const;
  std::vector<int> descents() const;
  /// Position pairs (i,j), i<j, with w(i) > w(j).
  std::vector<std::pair<int, int>> inversions() const;

  /// s_i * this: swaps the values i and i+1.
  Permutation left_simple(int i) const;
  /// this * s_i: swaps the positions i and i+1.
  Permutation right_simple(int i) const;
  /// True when the value i sits left of i+1, i.e. l(s_i w) = l(w) + 1.
  bool left_ascent(int i) const;

  /// A reduced word (i_1..i_r) with this = s_{i_1} ... s_{i_r}; peeled off
  /// from the right at the leftmost descent.
  std::vector<int> reduced_word() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

/// Block sum a (+) b, with b shifted up by a.size().
Permutation direct_sum(const Permutation& a, const Permutation& b);
/// All permutations of n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Left weak order: the position-inversion set of s is contained in that of
/// t, equivalently l(t s^-1) + l(s) = l(t).
bool weak_order_leq(const Permutation& s, const Permutation& t);

/// Minimal length representatives of the left cosets of S_m x S_n in
/// S_{m+n}: increasing on positions 1..m and on m+1..m+n. Lexicographic.
std::vector<Permutation> min_coset_reps(int m, int n);

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  static Composition from_descents(int n, const std::vector<int>& descents);
  /// "2,1,3" or "213"; "" and "()" give the empty composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// Partial sums D(I), sorted.
  std::vector<int> descent_set() const;

  Composition mirror() const;
  /// Column heights of the ribbon read right to left.
  Composition conjugate() const;

  std::string str() const;

  /// Orders by weight, then lexicographically by descent set.
  std::strong_ordering operator<=>(const Composition& rhs) const;
  bool operator==(const Composition& rhs) const = default;

 private:
  std::vector<int> parts_;
};

/// Compositions of n in lexicographic order of their descent sets.
std::vector<Composition> compositions(int n);

Composition descent_composition(const Permutation& s);

/// Column filling of the ribbon (minimum of the descent class).
Permutation alpha(const Composition& c);
/// Row filling of the ribbon (maximum of the descent class).
Permutation omega(const Composition& c);

/// {s : Des(s) = D(I)} in lexicographic order.
std::vector<Permutation> descent_class(const Composition& c);
/// {s : lo <= s <= hi} in left weak order, lexicographic.
std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi);

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }

  Partition conjugate() const;
  /// Multiset union of the parts.
  Partition join(const Partition& rhs) const;
  /// Centralizer order prod i^{m_i} m_i!.
  std::int64_t z() const;
  /// Parity of a permutation of this cycle type: +1 or -1.
  int sign() const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);

using Word = std::vector<int>;

std::string word_str(const Word& w);

/// All interleavings of u and v, sorted; u and v must use disjoint letters.
std::vector<Word> shuffle(const Word& u, const Word& v);

/// Union over i+j=k of (u[..i] sh v[..j]) . (u[i..] sh v[j..]), sorted.
std::vector<Word> shuffle_split(const Word& u, const Word& v, int k);

std::int64_t binomial(int n, int k);
std::int64_t factorial(int n);

}  // namespace towers
