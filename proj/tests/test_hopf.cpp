#include <set>

#include "doctest.h"
#include "towers/errors.hpp"
#include "towers/hecke.hpp"
#include "towers/hopf.hpp"
#include "towers/symmetric.hpp"
#include "towers/z2.hpp"

using namespace towers;

namespace {

Label comp(const char* s) { return Label::parse(LabelKind::composition, s); }
Label part(const char* s) { return Label::parse(LabelKind::partition, s); }

GVector terms(std::initializer_list<std::pair<LabelTuple, int>> list) {
  GVector v;
  for (const auto& [t, c] : list) add_term(v, t, c);
  return v;
}

std::set<std::string> failing_identities(const Report& r) {
  std::set<std::string> out;
  for (const Cell& c : r.cells)
    if (!c.equal) out.insert(c.identity);
  return out;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("labels") {
    CHECK(comp("2,1").str() == "(2,1)");
    CHECK(Label::empty(LabelKind::composition).str() == "()");
    CHECK(Label::parse(LabelKind::word, "TS").str() == "TS");
    CHECK(Label::parse(LabelKind::word, "TS").degree() == 2);
    CHECK(part("1") < part("2"));
    CHECK(part("2") < part("1,1"));
    CHECK_THROWS_AS(Label::parse(LabelKind::word, "TX"), std::invalid_argument);
  }

  TEST_CASE("hecke g0 product and coproduct") {
    GradedHopfData h = hecke_g0_combinatorial(5);
    CHECK(h.product(comp("1"), comp("1")) == terms({{{comp("2")}, 1}, {{comp("1,1")}, 1}}));
    const Label e = Label::empty(LabelKind::composition);
    CHECK(h.coproduct(comp("2,1")) == terms({{{e, comp("2,1")}, 1},
                                              {{comp("1"), comp("1,1")}, 1},
                                              {{comp("2"), comp("1")}, 1},
                                              {{comp("2,1"), e}, 1}}));
    CHECK(h.coproduct(e) == terms({{{e, e}, 1}}));
    for (int d = 0; d <= 3; ++d)
      for (const Label& x : h.basis(d)) CHECK(h.product(e, x) == basis_vector(x));
    CHECK_THROWS_AS(h.product(comp("3"), comp("3")), UsageError);
  }

  TEST_CASE("symmetric data by characters") {
    GradedHopfData h = sym_character_hopf_data(6);
    CHECK(h.product(part("1"), part("1")) == terms({{{part("2")}, 1}, {{part("1,1")}, 1}}));
    const Label e = Label::empty(LabelKind::partition);
    CHECK(h.coproduct(part("2")) == terms({{{e, part("2")}, 1}, {{part("1"), part("1")}, 1}, {{part("2"), e}, 1}}));
    CHECK(h.is_commutative());
    CHECK(h.is_cocommutative());
  }

  TEST_CASE("symmetric antipode against the conjugate-partition sign rule") {
    GradedHopfData h = sym_character_hopf_data(6);
    auto s = antipode(h, 6);
    CHECK(s.at(part("2")) == basis_vector(part("1,1")));
    for (int d = 0; d <= 6; ++d)
      for (const Label& x : h.basis(d)) {
        GVector want;
        add_term(want, {Label::of(x.partition().conjugate())}, d % 2 ? -1 : 1);
        CHECK(s.at(x) == want);
      }
  }

  TEST_CASE("antipode on low degrees") {
    GradedHopfData h = hecke_g0_combinatorial(4);
    auto s = antipode(h, 4);
    CHECK(s.at(Label::empty(LabelKind::composition)) == basis_vector(Label::empty(LabelKind::composition)));
    GVector minus;
    add_term(minus, {comp("1")}, -1);
    CHECK(s.at(comp("1")) == minus);
    CHECK(check_antipode(h, 4).passed());
  }

  TEST_CASE("bialgebra checks") {
    CHECK(check_bialgebra(sym_character_hopf_data(5), 5).passed());
    CHECK(check_bialgebra(hecke_g0_combinatorial(5), 5).passed());
    CHECK(check_bialgebra(dual_hopf_data(hecke_g0_combinatorial(5), "k0"), 5).passed());
  }

  TEST_CASE("z2 data fails only at compatibility") {
    Z2Tower t;
    GradedHopfData h = module_hopf_data(t, Group::g0, 4);
    Report r = check_bialgebra(h, 4);
    CHECK(failing_identities(r) == std::set<std::string>{"compatibility"});
    bool saw_ts = false;
    for (const Cell& c : r.cells)
      if (c.identity == "compatibility" && c.inputs["x"] == "T" && c.inputs["y"] == "S") {
        saw_ts = true;
        CHECK_FALSE(c.equal);
        CHECK(c.lhs == Json{{"()|TS", "1"}, {"TS|()", "1"}, {"T|S", "1"}});
        CHECK(c.rhs == Json{{"()|TS", "1"}, {"TS|()", "1"}, {"S|T", "1"}, {"T|S", "1"}});
      }
    CHECK(saw_ts);
    CHECK_FALSE(h.is_commutative());
    CHECK(check_asas(h, 4).passed());
  }

  TEST_CASE("asas fails for the symmetric tower") {
    Report r = check_asas(sym_character_hopf_data(3), 3);
    CHECK_FALSE(r.passed());
    const Cell* f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->inputs["x"] == "(1)");
    CHECK(f->inputs["y"] == "(1)");
    CHECK(f->inputs["k"] == "1");
    CHECK(f->lhs == Json{{"(1)|(1)", "2"}});
    CHECK(f->rhs == Json{{"(1)|(1)", "1"}});
  }

  TEST_CASE("duality") {
    GradedHopfData g0 = hecke_g0_combinatorial(4);
    GradedHopfData k0 = dual_hopf_data(g0, "k0");
    CHECK(check_duality(g0, k0, PairingMatrix::identity(k0, g0, 4), 4).passed());
    Report bad = check_duality(g0, k0, PairingMatrix::zero(k0, g0, 4), 4);
    CHECK_FALSE(bad.passed());
    CHECK(failing_identities(bad).count("pairing_unit"));
    PairingMatrix wrong;
    CHECK_THROWS_AS(check_duality(g0, k0, wrong, 4), UsageError);
  }

  TEST_CASE("dual data transposes the g0 constants") {
    GradedHopfData g0 = hecke_g0_combinatorial(4);
    GradedHopfData k0 = dual_hopf_data(g0, "k0");
    // ribbons: R_(1) R_(1) = R_(2) + R_(1,1)
    CHECK(k0.product(comp("1"), comp("1")) == terms({{{comp("2")}, 1}, {{comp("1,1")}, 1}}));
    // concatenation plus near-concatenation: R_(1) R_(2) = R_(1,2) + R_(3)
    CHECK(k0.product(comp("1"), comp("2")) == terms({{{comp("3")}, 1}, {{comp("1,2")}, 1}}));
    CHECK_FALSE(k0.is_commutative());
    // dual to the commutative shuffle product
    CHECK(k0.is_cocommutative());
  }

  TEST_CASE("compatibility cells") {
    CHECK(check_compatibility_cells(hecke_g0_combinatorial(6), 6).passed());
    CHECK(check_compatibility_cells(sym_character_hopf_data(5), 5).passed());
  }

  TEST_CASE("report json") {
    Report r;
    Cell c;
    c.identity = "x";
    c.lhs = "1";
    c.rhs = "2";
    c.equal = false;
    r.add(c);
    Json j = r.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["witness"]["lhs"] == "1");
    CHECK(r.csv_text() == "identity,inputs,lhs,rhs,equal\nx,{},\"\"\"1\"\"\",\"\"\"2\"\"\",false\n");
    CHECK(gv_json(terms({{{comp("2")}, 3}})) == Json{{"(2)", "3"}});
  }
}
