#include <algorithm>

#include "doctest.h"
#include "towers/perm_algebra.hpp"
#include "towers/symmetric.hpp"

using namespace towers;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

int fixed_points(const Permutation& p) {
  int f = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) ++f;
  return f;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> seen(p.size() + 1), parts;
  for (int i = 1; i <= p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

TEST_SUITE("symmetric") {
  TEST_CASE("character values") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& mu : partitions(n)) CHECK(mn_character(Partition(std::vector<int>{n}), mu) == 1);
    CHECK(mn_character(P("1,1,1"), P("1,1,1")) == 1);
    CHECK(mn_character(P("1,1,1"), P("2,1")) == -1);
    CHECK(mn_character(P("2,1"), P("1,1,1")) == 2);
  }

  TEST_CASE("characters against permutation counts") {
    // fixed points = chi^(n) + chi^(n-1,1); the sign character is the parity
    for (int n = 2; n <= 6; ++n)
      for (const auto& s : all_permutations(n)) {
        const Partition mu = cycle_type(s);
        std::vector<int> hook{n - 1, 1};
        CHECK(mn_character(Partition(std::vector<int>{n}), mu) + mn_character(Partition(hook), mu) == fixed_points(s));
        CHECK(mn_character(Partition(std::vector<int>(n, 1)), mu) == (s.length() % 2 ? -1 : 1));
      }
  }

  TEST_CASE("orthogonality") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& a : partitions(n))
        for (const auto& b : partitions(n))
          CHECK(inner_product(ClassFunction::irreducible({a}), ClassFunction::irreducible({b})) == (a == b ? 1 : 0));
      for (const auto& mu : partitions(n))
        for (const auto& nu : partitions(n)) {
          Integer s = 0;
          for (const auto& l : partitions(n)) s += mn_character(l, mu) * mn_character(l, nu);
          CHECK(s == (mu == nu ? Integer(static_cast<long>(mu.z())) : Integer(0)));
        }
    }
  }

  TEST_CASE("induction and restriction of class functions") {
    auto triv1 = ClassFunction::irreducible({P("1")});
    ClassFunction ind = induce_factors(outer_product(triv1, triv1), 0);
    CHECK(ind[{P("1,1")}] == 2);
    CHECK(ind[{P("2")}] == 0);
    CHECK(decompose_into_irreducibles(ind) == GVector{{{Label::of(P("2"))}, 1}, {{Label::of(P("1,1"))}, 1}});

    ClassFunction with_empty = induce_factors(ClassFunction::irreducible({P("1"), Partition()}), 0);
    CHECK(with_empty == triv1);

    ClassFunction pieri = induce_factors(ClassFunction::irreducible({P("2"), P("1")}), 0);
    CHECK(inner_product(pieri, ClassFunction::irreducible({P("2,1")})) == 1);

    ClassFunction r = restrict_factor(ClassFunction::irreducible({P("2")}), 0, 1);
    CHECK(r == ClassFunction::irreducible({P("1"), P("1")}));
    ClassFunction r0 = restrict_factor(ClassFunction::irreducible({P("2,1")}), 0, 0);
    CHECK(decompose_into_irreducibles(r0) == GVector{{{Label::of(Partition()), Label::of(P("2,1"))}, 1}});
    CHECK(decompose_into_irreducibles(restrict_factor(ClassFunction::irreducible({P("2,1")}), 0, 2)) ==
          GVector{{{Label::of(P("2")), Label::of(P("1"))}, 1}, {{Label::of(P("1,1")), Label::of(P("1"))}, 1}});
  }

  TEST_CASE("frobenius reciprocity") {
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; m + n <= 5; ++n)
        for (const auto& a : partitions(m))
          for (const auto& b : partitions(n))
            for (const auto& c : partitions(m + n)) {
              auto phi = ClassFunction::irreducible({a, b});
              auto psi = ClassFunction::irreducible({c});
              CHECK(inner_product(induce_factors(phi, 0), psi) == inner_product(phi, restrict_factor(psi, 0, m)));
            }
  }

  TEST_CASE("regular character") {
    GVector d = decompose_into_irreducibles(ClassFunction::regular(3));
    CHECK(d == GVector{{{Label::of(P("3"))}, 1}, {{Label::of(P("2,1"))}, 2}, {{Label::of(P("1,1,1"))}, 1}});
    ClassFunction bad({2});
    bad[{P("2")}] = 1;
    CHECK_THROWS(decompose_into_irreducibles(bad));
  }

  TEST_CASE("frobenius characteristic") {
    CHECK(frobenius_ch(ClassFunction::irreducible({P("1")})) == SymFunctionP{{P("1"), 1}});
    CHECK(frobenius_ch(ClassFunction::irreducible({P("2")})) == SymFunctionP{{P("1,1"), fraction(1, 2)}, {P("2"), fraction(1, 2)}});
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; m + n <= 5; ++n)
        for (const auto& a : partitions(m))
          for (const auto& b : partitions(n)) {
            auto ind = induce_factors(ClassFunction::irreducible({a, b}), 0);
            CHECK(frobenius_ch(ind) == multiply(frobenius_ch(ClassFunction::irreducible({a})),
                                                frobenius_ch(ClassFunction::irreducible({b}))));
          }
  }

  TEST_CASE("embedding on the permutation basis") {
    SymmetricTower s;
    auto e = s.embedding(2, 3);
    const int src = lex_index(Permutation::parse("21")) * 6 + lex_index(Permutation::parse("312"));
    CHECK(e->images.at(src) == SparseQ{{lex_index(Permutation::parse("21534")), Rational(1)}});
  }

  TEST_CASE("seminormal modules carry the irreducible characters") {
    SymmetricTower s;
    for (int n = 0; n <= 5; ++n)
      for (const auto& l : partitions(n)) {
        Module m = s.simple_module(Label::of(l));
        m.verify();
        CHECK(s.character(m) == ClassFunction::irreducible({l}));
      }
  }

  TEST_CASE("module route matches characters up to degree 4") {
    SymmetricTower s;
    GradedHopfData mod = module_hopf_data(s, Group::g0, 4);
    GradedHopfData chr = sym_character_hopf_data(4);
    for (int a = 0; a <= 4; ++a)
      for (const Label& x : chr.basis(a)) {
        CHECK(mod.coproduct(x) == chr.coproduct(x));
        for (int b = 0; a + b <= 4; ++b)
          for (const Label& y : chr.basis(b)) CHECK(mod.product(x, y) == chr.product(x, y));
      }
  }

  TEST_CASE("mackey by characters") { CHECK(sym_condition5_characters(6).passed()); }
}
