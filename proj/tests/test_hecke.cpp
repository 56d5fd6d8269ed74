#include "doctest.h"
#include "towers/hecke.hpp"
#include "towers/perm_algebra.hpp"

#include <algorithm>
#include <cstdlib>

using namespace towers;

namespace {

Composition C(const char* s) { return Composition::parse(s); }
Permutation P(const char* s) { return Permutation::parse(s); }
Label comp(const char* s) { return Label::parse(LabelKind::composition, s); }

HeckeElement Ti(int n, int i) { return hecke_T(Permutation::identity(n).right_simple(i)); }

HeckeElement scaled(const HeckeElement& x, const Rational& c) { return hecke_add(HeckeElement{}, x, c); }

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("relations") {
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i) {
        CHECK(hecke_multiply(Ti(n, i), Ti(n, i)) == scaled(Ti(n, i), -1));
        HeckeElement box = hecke_add(hecke_unit(n), Ti(n, i));
        CHECK(hecke_multiply(box, box) == box);
        for (int j = 1; j < n; ++j) {
          if (std::abs(i - j) > 1) CHECK(hecke_multiply(Ti(n, i), Ti(n, j)) == hecke_multiply(Ti(n, j), Ti(n, i)));
          if (j == i + 1) {
            auto a = hecke_multiply(hecke_multiply(Ti(n, i), Ti(n, j)), Ti(n, i));
            auto b = hecke_multiply(hecke_multiply(Ti(n, j), Ti(n, i)), Ti(n, j));
            CHECK(a == b);
          }
        }
      }
    HeckeElement x = hecke_add(hecke_T(P("231")), hecke_T(P("132")), 3);
    CHECK(hecke_multiply(hecke_unit(3), x) == x);
    CHECK(hecke_multiply(x, hecke_unit(3)) == x);
    CHECK_THROWS_AS(hecke_multiply(hecke_unit(2), hecke_unit(3)), std::invalid_argument);
  }

  TEST_CASE("T_sigma is multiplicative along reduced words") {
    for (const auto& s : all_permutations(4)) {
      HeckeElement acc = hecke_unit(4);
      for (int i : s.reduced_word()) acc = hecke_multiply(acc, Ti(4, i));
      CHECK(acc == hecke_T(s));
    }
  }

  TEST_CASE("nu of (2,1)") {
    HeckeElement nu21 = nu(C("2,1"));
    // T_2 (1 + T_1) = T_132 + T_312
    CHECK(nu21 == hecke_add(hecke_T(P("132")), hecke_T(P("312"))));
    CHECK(hecke_multiply(nu21, nu21) == scaled(nu21, -1));
  }

  TEST_CASE("eta action rule") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : compositions(n)) {
        HeckeElement e = eta(c);
        CHECK_FALSE(e.empty());
        const auto d = c.descent_set();
        for (int i = 1; i < n; ++i) {
          const bool desc = std::find(d.begin(), d.end(), i) != d.end();
          CHECK(hecke_multiply(Ti(n, i), e) == (desc ? scaled(e, -1) : HeckeElement{}));
        }
      }
    CHECK(eta(C("1")) == hecke_unit(1));
  }

  TEST_CASE("simple modules") {
    HeckeTower h;
    Module m21 = h.simple_module(comp("2,1"));
    const auto& g = m21.generator_actions();
    CHECK(g[0](0, 0) == 0);
    CHECK(g[1](0, 0) == -1);
    Module top = h.simple_module(comp("4"));
    for (const auto& m : top.generator_actions()) CHECK(m(0, 0) == 0);
    Module bottom = h.simple_module(comp("1,1,1,1"));
    for (const auto& m : bottom.generator_actions()) CHECK(m(0, 0) == -1);
  }

  TEST_CASE("projective modules") {
    HeckeTower h;
    for (int n = 1; n <= 5; ++n) {
      std::int64_t total = 0;
      for (const auto& c : compositions(n)) {
        Module m = h.projective_module(Label::of(c));
        m.verify();
        CHECK(m.dim() == static_cast<int>(descent_class(c).size()));
        total += m.dim();
      }
      CHECK(total == factorial(n));
      CHECK(h.projective_module(Label::of(C(std::to_string(n).c_str()))).dim() == 1);
    }
  }

  TEST_CASE("composition factors") {
    HeckeTower h;
    for (int n = 1; n <= 4; ++n)
      for (const Label& l : h.labels(n)) CHECK(h.decompose_simple(h.simple_module(l)) == GVector{{{l}, 1}});
    GVector reg = h.decompose_simple(regular_module(h.algebra(3)));
    CHECK(reg == GVector{{{comp("3")}, 1}, {{comp("1,2")}, 2}, {{comp("1,1,1")}, 1}, {{comp("2,1")}, 2}});
    GVector ind = h.decompose_simple(induce(h, h.simple_module(comp("1")), h.simple_module(comp("1"))));
    CHECK(ind == GVector{{{comp("2")}, 1}, {{comp("1,1")}, 1}});
  }

  TEST_CASE("projective decomposition") {
    HeckeTower h;
    GVector reg = h.decompose_projective(regular_module(h.algebra(3)));
    for (const Label& l : h.labels(3)) CHECK(reg.at({l}) == 1);
    CHECK(reg.size() == 4);
    for (const Label& l : h.labels(3)) CHECK(h.decompose_projective(h.projective_module(l)) == GVector{{{l}, 1}});
  }

  TEST_CASE("shuffle product") {
    CHECK(g0_product_shuffle(C("1"), C("1")) == GVector{{{comp("2")}, 1}, {{comp("1,1")}, 1}});
    CHECK(g0_product_shuffle(C("2"), C("1")) == GVector{{{comp("3")}, 1}, {{comp("2,1")}, 1}, {{comp("1,2")}, 1}});
    // independent of the representative chosen in each descent class
    for (const auto& a : compositions(2))
      for (const auto& b : compositions(2)) {
        GVector via_omega;
        Word u = omega(a).window(), v = omega(b).window();
        for (int& x : v) x += 2;
        for (const Word& w : shuffle(u, v)) add_term(via_omega, {Label::of(descent_composition(Permutation(w)))}, 1);
        CHECK(via_omega == g0_product_shuffle(a, b));
      }
  }

  TEST_CASE("anti-involution") {
    for (int n = 1; n <= 4; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& s : perms)
        for (const auto& t : perms) {
          auto st = hecke_multiply(hecke_T(s), hecke_T(t));
          CHECK(anti_involution(st) == hecke_multiply(hecke_T(t.inverse()), hecke_T(s.inverse())));
        }
    }
    CHECK(anti_involution(Ti(3, 2)) == Ti(3, 2));
    for (int n = 1; n <= 6; ++n)
      for (const auto& c : compositions(n)) CHECK(alpha(c).inverse() == alpha(c));
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : compositions(n)) {
        auto want = hecke_multiply(box_element(alpha(c.mirror().conjugate()).inverse()), hecke_T(alpha(c)));
        CHECK(anti_involution(nu(c)) == want);
      }
  }

  TEST_CASE("the ideals of nu and its image are isomorphic") {
    HeckeTower h;
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : compositions(n)) {
        Module a = h.left_ideal(nu(c), n);
        Module b = h.left_ideal(anti_involution(nu(c)), n);
        CHECK(a.dim() == b.dim());
        CHECK(module_isomorphic(a, b));
        CHECK(module_isomorphic(a, h.projective_module(Label::of(c))));
      }
  }

  TEST_CASE("module g0 data matches the shuffle data") {
    HeckeTower h;
    GradedHopfData mod = module_hopf_data(h, Group::g0, 4);
    GradedHopfData comb = hecke_g0_combinatorial(4);
    for (int a = 0; a <= 4; ++a)
      for (const Label& x : comb.basis(a)) {
        CHECK(mod.coproduct(x) == comb.coproduct(x));
        for (int b = 0; a + b <= 4; ++b)
          for (const Label& y : comb.basis(b)) CHECK(mod.product(x, y) == comb.product(x, y));
      }
  }
}
