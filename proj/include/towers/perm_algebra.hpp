#pragma once

// Algebras with a basis indexed by S_n (group algebra, 0-Hecke algebra).

#include <functional>
#include <utility>
#include <vector>

#include "towers/algebra.hpp"
#include "towers/combinatorics.hpp"

namespace towers {

/// Position of p in the lexicographic list all_permutations(p.size()).
int lex_index(const Permutation& p);

/// Left action of the i-th generator on a basis element: (new basis
/// element, sign).
using SimpleAction = std::function<std::pair<Permutation, int>(int i, const Permutation& p)>;

/// Basis element sigma times basis element tau, expanding a reduced word of
/// sigma and applying its letters right to left.
std::pair<Permutation, int> perm_basis_product(const Permutation& sigma, const Permutation& tau,
                                               const SimpleAction& act);

/// Algebra on the permutations of n (lexicographic order) with generators
/// labelled prefix+i for i = 1..n-1 and monomials given by reduced words.
Algebra permutation_algebra(int n, const SimpleAction& act, const std::string& prefix);

/// Images of the basis of A_m (x) A_n under sigma (x) tau -> sigma (+) tau.
std::vector<SparseQ> direct_sum_images(int m, int n);

std::vector<SparseQ> coset_rep_elements(int m, int n, bool inverse);

}  // namespace towers
