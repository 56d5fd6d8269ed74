#include "doctest.h"
#include "towers/z2.hpp"

using namespace towers;

namespace {

Label word(const char* s) { return Label::parse(LabelKind::word, s); }

}  // namespace

TEST_SUITE("z2") {
  TEST_CASE("labels and simples") {
    Z2Tower z;
    auto l = z.labels(2);
    REQUIRE(l.size() == 4);
    CHECK(l[0].str() == "TT");
    CHECK(l[1].str() == "TS");
    CHECK(l[3].str() == "SS");
    CHECK(z.labels(0).size() == 1);
    for (int n = 0; n <= 3; ++n)
      for (const Label& w : z.labels(n)) {
        Module m = z.simple_module(w);
        m.verify();
        CHECK(z.decompose_simple(m) == GVector{{{w}, 1}});
      }
  }

  TEST_CASE("induction concatenates, restriction splits") {
    Z2Tower z;
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; m + n <= 4; ++n)
        for (const Label& u : z.labels(m))
          for (const Label& v : z.labels(n)) {
            std::vector<int> uv = u.parts;
            uv.insert(uv.end(), v.parts.begin(), v.parts.end());
            Module ind = induce(z, z.simple_module(u), z.simple_module(v));
            CHECK(z.decompose_simple(ind) == GVector{{{Label::word(uv)}, 1}});
            for (int k = 0; k <= m + n; ++k) {
              GVector r = z.decompose_simple(restrict(z, ind, k));
              std::vector<int> a(uv.begin(), uv.begin() + k), b(uv.begin() + k, uv.end());
              CHECK(r == GVector{{{Label::word(a), Label::word(b)}, 1}});
            }
          }
  }

  TEST_CASE("regular module") {
    Z2Tower z;
    GVector d = z.decompose_simple(regular_module(z.algebra(3)));
    CHECK(d.size() == 8);
    for (const auto& [t, c] : d) CHECK(c == 1);
  }

  TEST_CASE("conditions") {
    Z2Tower z;
    CHECK(check_conditions12(z, 4).passed());
    CHECK(check_condition3(z, 4).passed());
    CHECK(check_pairing_modules(z, 3).passed());
    Report r = check_condition5_modules(z, Group::g0, 2);
    CHECK_FALSE(r.passed());
    bool found = false;
    for (const Cell& c : r.cells)
      if (c.inputs == Json{{"x", "T"}, {"y", "S"}, {"k", "1"}}) {
        found = true;
        CHECK_FALSE(c.equal);
        CHECK(c.lhs == Json{{"T|S", "1"}});
        CHECK(c.rhs == Json{{"S|T", "1"}, {"T|S", "1"}});
      }
    CHECK(found);
    CHECK(check_asas(module_hopf_data(z, Group::g0, 4), 4).passed());
  }
}
