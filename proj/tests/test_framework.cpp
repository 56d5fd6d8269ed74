#include "doctest.h"
#include "towers/errors.hpp"
#include "towers/hecke.hpp"
#include "towers/symmetric.hpp"
#include "towers/z2.hpp"

using namespace towers;

namespace {

Label comp(const char* s) { return Label::parse(LabelKind::composition, s); }
Label part(const char* s) { return Label::parse(LabelKind::partition, s); }
Label word(const char* s) { return Label::parse(LabelKind::word, s); }

Module direct_sum_modules(const Module& a, const Module& b) {
  const int d = a.dim() + b.dim();
  std::vector<Matrix> gens;
  for (size_t g = 0; g < a.generator_actions().size(); ++g) {
    Matrix m(d, d);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) m(i, j) = a.generator_actions()[g](i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.generator_actions()[g](i, j);
    gens.push_back(std::move(m));
  }
  return Module(a.algebra(), d, std::move(gens));
}

const Cell* find_cell(const Report& r, const std::string& identity, const Json& inputs) {
  for (const Cell& c : r.cells)
    if (c.identity == identity && c.inputs == inputs) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("framework") {
  TEST_CASE("algebras verify and A_0 is one-dimensional") {
    SymmetricTower s;
    HeckeTower h;
    Z2Tower z;
    for (int n = 0; n <= 4; ++n) {
      CHECK(s.algebra(n)->dim() == factorial(n));
      CHECK(h.algebra(n)->dim() == factorial(n));
      CHECK(z.algebra(n)->dim() == (1 << n));
    }
    CHECK_THROWS_AS(z.algebra(5), DegreeCapError);
  }

  TEST_CASE("tensor product of algebras is associative on bases") {
    HeckeTower h;
    auto left = tensor_product(*h.tensor_algebra({1, 2}), *h.algebra(2));
    auto right = h.tensor_algebra({1, 2, 2});
    CHECK(left.dim() == right->dim());
    CHECK(left.basis_labels() == right->basis_labels());
    left.verify();
  }

  TEST_CASE("induce dimensions") {
    Z2Tower z;
    CHECK(induce(z, z.simple_module(word("T")), z.simple_module(word("S"))).dim() == 1);
    HeckeTower h;
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; m + n <= 4; ++n)
        for (const Label& x : h.labels(m))
          for (const Label& y : h.labels(n))
            CHECK(induce(h, h.simple_module(x), h.simple_module(y)).dim() == binomial(m + n, m));
    SymmetricTower s;
    Module ind = induce(s, s.simple_module(part("1")), s.simple_module(part("1")));
    CHECK(ind.dim() == 2);
    ClassFunction chi = s.character(ind);
    CHECK(chi[{Partition::parse("1,1")}] == 2);
    CHECK(chi[{Partition::parse("2")}] == 0);
    GVector d = s.decompose_simple(ind);
    CHECK(d.size() == 2);
    CHECK(d.at({part("2")}) == 1);
    CHECK(d.at({part("1,1")}) == 1);
  }

  TEST_CASE("restrict") {
    HeckeTower h;
    Module c = h.simple_module(comp("2,1"));
    Module r0 = restrict(h, c, 0);
    CHECK(r0.dim() == 1);
    GVector d = h.decompose_simple(restrict(h, c, 1));
    CHECK(d == GVector{{{comp("1"), comp("1,1")}, 1}});
    SymmetricTower s;
    GVector e = s.decompose_simple(restrict(s, s.simple_module(part("2")), 1));
    CHECK(e == GVector{{{part("1"), part("1")}, 1}});
  }

  TEST_CASE("twisted induction on the z2 tower") {
    Z2Tower z;
    Module rt = restrict(z, z.simple_module(word("T")), 0);  // () (x) T
    Module rs = restrict(z, z.simple_module(word("S")), 1);  // S (x) ()
    GVector d = z.decompose_simple(twisted_induce(z, rt, rs));
    CHECK(d == GVector{{{word("S"), word("T")}, 1}});
  }

  TEST_CASE("condition 3") {
    SymmetricTower s;
    HeckeTower h;
    Z2Tower z;
    Json in21{{"m", "2"}, {"n", "1"}, {"representatives", "3"}};
    for (const Tower* t : std::vector<const Tower*>{&s, &h}) {
      Report r = check_condition3(*t, 4);
      CHECK(r.passed());
      const Cell* c = find_cell(r, "right_free", in21);
      REQUIRE(c != nullptr);
      CHECK(c->lhs == "6");
    }
    Report rz = check_condition3(z, 2);
    CHECK(rz.passed());
    const Cell* c = find_cell(rz, "left_free", Json{{"m", "1"}, {"n", "1"}, {"representatives", "1"}});
    REQUIRE(c != nullptr);
    CHECK(c->lhs == "4");
  }

  TEST_CASE("conditions 1 and 2 with a corrupted embedding") {
    HeckeTower h;
    CHECK(check_conditions12(h, 4).passed());
    h.corrupt_embedding(2, 1, 0, 1);
    Report r = check_conditions12(h, 3);
    CHECK_FALSE(r.passed());
    const Cell* m = find_cell(r, "multiplicative", Json{{"m", "2"}, {"n", "1"}, {"x", "12|1"}, {"y", "12|1"}});
    REQUIRE(m != nullptr);
    CHECK_FALSE(m->equal);
    CHECK(r.to_json().contains("witness"));
  }

  TEST_CASE("hom dimensions") {
    HeckeTower h;
    for (const Label& p : h.labels(3))
      for (const Label& v : h.labels(3))
        CHECK(pairing_dim_hom(h.projective_module(p), h.simple_module(v)) == (p == v ? 1 : 0));
    SymmetricTower s;
    for (const Label& a : s.labels(4))
      for (const Label& b : s.labels(4))
        CHECK(pairing_dim_hom(s.simple_module(a), s.simple_module(b)) == (a == b ? 1 : 0));
    Module reg = regular_module(h.algebra(3));
    CHECK(pairing_dim_hom(reg, reg) >= 1);
  }

  TEST_CASE("pairing is additive on split sums") {
    HeckeTower h;
    for (const Label& p : h.labels(3)) {
      Module proj = h.projective_module(p);
      for (const Label& a : h.labels(3))
        for (const Label& b : h.labels(3)) {
          Module sum = direct_sum_modules(h.projective_module(a), h.simple_module(b));
          CHECK(pairing_dim_hom(proj, sum) ==
                pairing_dim_hom(proj, h.projective_module(a)) + pairing_dim_hom(proj, h.simple_module(b)));
        }
    }
  }

  TEST_CASE("induction is associative up to composition factors") {
    HeckeTower h;
    SymmetricTower s;
    for (const Tower* t : std::vector<const Tower*>{&h, &s})
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; a + b <= 3; ++b)
          for (int c = 1; a + b + c <= 4; ++c)
            for (const Label& x : t->labels(a))
              for (const Label& y : t->labels(b))
                for (const Label& z : t->labels(c)) {
                  Module l = t->simple_module(x), m = t->simple_module(y), n = t->simple_module(z);
                  Module left = induce(*t, induce(*t, l, m), n);
                  Module right = induce(*t, l, induce(*t, m, n));
                  CHECK(left.dim() == right.dim());
                  CHECK(t->decompose_simple(left) == t->decompose_simple(right));
                }
  }

  TEST_CASE("module isomorphism") {
    HeckeTower h;
    Module x = h.projective_module(comp("2,1"));
    CHECK(module_isomorphic(x, x));
    CHECK_FALSE(module_isomorphic(h.simple_module(comp("2")), h.simple_module(comp("1,1"))));
    CHECK_FALSE(module_isomorphic(h.projective_module(comp("2,1")), h.projective_module(comp("1,2"))));
  }

  TEST_CASE("modules reject wrong shapes") {
    HeckeTower h;
    CHECK_THROWS_AS(Module(h.algebra(3), 1, {Matrix::scalar(1, 0)}), std::invalid_argument);
  }

  TEST_CASE("parallel_for keeps results by index") {
    std::vector<int> out(100);
    parallel_for(100, [&](int i) { out[i] = i * i; });
    for (int i = 0; i < 100; ++i) CHECK(out[i] == i * i);
    CHECK_THROWS_AS(parallel_for(10, [](int i) { if (i == 7) throw ComputationError("boom"); }), ComputationError);
  }
}
