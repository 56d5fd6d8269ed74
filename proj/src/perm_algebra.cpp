#include "towers/perm_algebra.hpp"

namespace towers {

int lex_index(const Permutation& p) {
  const int n = p.size();
  int index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.window()[j] < p.window()[i]) ++smaller;
    index = index * (n - i) + smaller;
  }
  return index;
}

std::pair<Permutation, int> perm_basis_product(const Permutation& sigma, const Permutation& tau,
                                               const SimpleAction& act) {
  auto word = sigma.reduced_word();
  Permutation p = tau;
  int sign = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto [q, s] = act(*it, p);
    p = std::move(q);
    sign *= s;
  }
  return {p, sign};
}

Algebra permutation_algebra(int n, const SimpleAction& act, const std::string& prefix) {
  const auto perms = all_permutations(n);
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(n == 0 ? "()" : p.str());
  Algebra a({n}, labels, sparse_unit(0));
  const int d = static_cast<int>(perms.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto [p, s] = perm_basis_product(perms[i], perms[j], act);
      a.set_product(i, j, SparseQ{{lex_index(p), Rational(s)}});
    }
  for (int i = 1; i < n; ++i) {
    a.add_generator({prefix + std::to_string(i), 0, sparse_unit(lex_index(Permutation::identity(n).right_simple(i)))});
  }
  for (int i = 0; i < d; ++i) {
    std::vector<int> word;
    for (int g : perms[i].reduced_word()) word.push_back(g - 1);
    a.set_monomial(i, std::move(word));
  }
  return a;
}

std::vector<SparseQ> direct_sum_images(int m, int n) {
  std::vector<SparseQ> out;
  for (const auto& s : all_permutations(m))
    for (const auto& t : all_permutations(n)) out.push_back(sparse_unit(lex_index(direct_sum(s, t))));
  return out;
}

std::vector<SparseQ> coset_rep_elements(int m, int n, bool inverse) {
  std::vector<SparseQ> out;
  for (const auto& t : min_coset_reps(m, n)) out.push_back(sparse_unit(lex_index(inverse ? t.inverse() : t)));
  return out;
}

}  // namespace towers
