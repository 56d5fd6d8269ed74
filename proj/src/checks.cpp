#include "towers/checks.hpp"

#include <chrono>
#include <set>

#include "towers/errors.hpp"
#include "towers/hecke.hpp"
#include "towers/symmetric.hpp"
#include "towers/z2.hpp"

namespace towers {

std::unique_ptr<Tower> make_tower(const std::string& name) {
  if (name == "sym") return std::make_unique<SymmetricTower>();
  if (name == "hecke0") return std::make_unique<HeckeTower>();
  if (name == "z2") return std::make_unique<Z2Tower>();
  throw UsageError("unknown tower '" + name + "' (expected sym, hecke0 or z2)");
}

namespace {

const std::set<std::string> kChecks{"cond12", "cond3", "cond5", "cond5prime", "bialgebra", "duality", "antipode", "pairing"};
const std::set<std::string> kOps{"product", "coproduct", "antipode", "pairing", "characters", "module-bases"};

Group parse_group(const std::string& g) {
  if (g == "g0") return Group::g0;
  if (g == "k0") return Group::k0;
  throw UsageError("unknown group '" + g + "' (expected g0 or k0)");
}

bool module_only(const std::string& check) { return check == "cond12" || check == "cond3"; }

void check_route(const std::string& tower, const std::string& check, const std::string& route) {
  static const std::set<std::string> known{"auto", "character", "module", "combinatorial"};
  if (!known.count(route)) throw UsageError("unknown route '" + route + "'");
  if (route == "auto") return;
  if (module_only(check) && route != "module") throw UsageError(check + " is computed on modules only");
  if (route == "character" && tower != "sym") throw UsageError("the character route exists for sym only");
  if (route == "combinatorial" && tower != "hecke0") throw UsageError("the combinatorial route exists for hecke0 only");
  if (check == "pairing" && route == "combinatorial") throw UsageError("pairing is computed on modules");
}

void check_cap(const std::string& tower, const std::string& route, int n) {
  if (n < 0) throw UsageError("max degree must be nonnegative");
  const int cap = route_cap(tower, route);
  if (n > cap)
    throw DegreeCapError(tower + ": degree " + std::to_string(n) + " exceeds the " + route + " route cap " +
                         std::to_string(cap));
}

PairingMatrix character_pairing(int n_max) {
  PairingMatrix p;
  for (int d = 0; d <= n_max; ++d) {
    const auto parts = partitions(d);
    std::vector<std::vector<Integer>> block(parts.size(), std::vector<Integer>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) {
        Rational q = inner_product(ClassFunction::irreducible({parts[i]}), ClassFunction::irreducible({parts[j]}));
        if (q.get_den() != 1) throw ComputationError("character inner product is not an integer");
        block[i][j] = q.get_num();
      }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Report orthonormality_cells(int n_max) {
  Report r;
  for (int d = 0; d <= n_max; ++d)
    for (const Partition& a : partitions(d))
      for (const Partition& b : partitions(d)) {
        Rational q = inner_product(ClassFunction::irreducible({a}), ClassFunction::irreducible({b}));
        Cell c;
        c.identity = "orthonormality";
        c.inputs = Json{{"lambda", Label::of(a).str()}, {"mu", Label::of(b).str()}};
        c.lhs = q.get_str();
        c.rhs = a == b ? "1" : "0";
        c.equal = q == (a == b ? 1 : 0);
        r.add(c);
      }
  return r;
}

GradedHopfData hopf_data(const Tower& t, const std::string& route, Group g, int n) {
  if (route == "character") return sym_character_hopf_data(n);
  if (route == "combinatorial") {
    GradedHopfData g0 = hecke_g0_combinatorial(n);
    return g == Group::g0 ? g0 : dual_hopf_data(g0, "hecke0:k0:dual");
  }
  return module_hopf_data(t, g, n);
}

PairingMatrix pairing_for(const Tower& t, const std::string& route, const GradedHopfData& g0,
                          const GradedHopfData& k0, int n) {
  if (route == "character") return character_pairing(n);
  if (route == "combinatorial") return PairingMatrix::identity(k0, g0, n);
  return module_pairing(t, n);
}

Json check_request_json(const CheckRequest& req, const std::string& route) {
  return Json{{"tower", req.tower},
              {"check", req.check},
              {"group", req.group},
              {"route", route},
              {"max_degree", std::to_string(req.max_degree)},
              {"negative_control", req.negative_control}};
}

std::string csv_value(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

int route_cap(const std::string& tower, const std::string& route) {
  if (tower == "sym") return route == "character" ? 6 : 5;
  if (tower == "hecke0") return route == "combinatorial" ? 6 : 5;
  return 4;
}

std::string resolve_route(const std::string& tower, const std::string& check, const std::string& group, int n) {
  (void)group;
  if (module_only(check) || tower == "z2") return "module";
  if (tower == "sym") return "character";
  if (check == "pairing") return "module";
  return n <= 4 ? "module" : "combinatorial";
}

Report run_check(const CheckRequest& req) {
  auto tower = make_tower(req.tower);
  if (!kChecks.count(req.check)) throw UsageError("unknown check '" + req.check + "'");
  const Group g = parse_group(req.group);
  check_route(req.tower, req.check, req.route);
  const std::string route = req.route == "auto" ? resolve_route(req.tower, req.check, req.group, req.max_degree) : req.route;
  const int n = req.max_degree;
  check_cap(req.tower, route, n);
  if (req.negative_control) {
    if (req.check == "cond12") {
      if (req.tower == "z2") throw UsageError("z2 embeddings permute idempotents; no swap breaks them");
      if (n < 3) throw UsageError("the corrupted embedding lives in degree 3; use --max-degree >= 3");
    } else if (req.check != "duality") {
      throw UsageError("negative controls exist for cond12 and duality");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (req.check == "cond12") {
    // Swap the images of 12|1 and 21|1 in rho_{2,1}.
    if (req.negative_control) tower->corrupt_embedding(2, 1, 0, 1);
    r = check_conditions12(*tower, n);
  } else if (req.check == "cond3") {
    r = check_condition3(*tower, n);
  } else if (req.check == "cond5") {
    if (route == "character") r = sym_condition5_characters(n);
    else if (route == "combinatorial") r = check_compatibility_cells(hopf_data(*tower, route, g, n), n);
    else r = check_condition5_modules(*tower, g, n);
  } else if (req.check == "cond5prime") {
    r = check_asas(hopf_data(*tower, route, g, n), n);
  } else if (req.check == "bialgebra") {
    r = check_bialgebra(hopf_data(*tower, route, g, n), n);
  } else if (req.check == "antipode") {
    r = check_antipode(hopf_data(*tower, route, g, n), n);
  } else if (req.check == "duality") {
    GradedHopfData g0 = hopf_data(*tower, route, Group::g0, n);
    GradedHopfData k0 = hopf_data(*tower, route, Group::k0, n);
    PairingMatrix p = req.negative_control ? PairingMatrix::zero(k0, g0, n) : pairing_for(*tower, route, g0, k0, n);
    r = check_duality(g0, k0, p, n);
  } else if (req.check == "pairing") {
    r = route == "character" ? orthonormality_cells(n) : check_pairing_modules(*tower, n);
  }
  r.request = check_request_json(req, route);
  if (req.timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------- tables

namespace {

std::vector<Label> labels_for(const std::string& tower, int d) { return make_tower(tower)->labels(d); }

}  // namespace

Document run_table(const TableRequest& req) {
  auto tower = make_tower(req.tower);
  if (!kOps.count(req.op)) throw UsageError("unknown table op '" + req.op + "'");
  const Group g = parse_group(req.group);
  check_route(req.tower, req.op == "pairing" ? "pairing" : "table", req.route);
  for (int d : req.degrees)
    if (d < 0) throw UsageError("degrees must be nonnegative");

  Json rows = Json::array();
  std::vector<std::string> columns{"x", "value"};
  std::string route;
  auto need_degrees = [&](size_t count) {
    if (req.degrees.size() != count)
      throw UsageError(req.op + " expects " + std::to_string(count) + " degree(s) in --degree");
  };
  auto resolve = [&](int n) {
    route = req.route == "auto" ? resolve_route(req.tower, req.op, req.group, n) : req.route;
    check_cap(req.tower, route, n);
  };

  if (req.op == "product") {
    need_degrees(2);
    const int a = req.degrees[0], b = req.degrees[1];
    resolve(a + b);
    GradedHopfData h = hopf_data(*tower, route, g, a + b);
    columns = {"x", "y", "value"};
    for (const Label& x : h.basis(a))
      for (const Label& y : h.basis(b)) rows.push_back(Json{{"x", x.str()}, {"y", y.str()}, {"value", gv_str(h.product(x, y))}});
  } else if (req.op == "coproduct" || req.op == "antipode") {
    need_degrees(1);
    const int n = req.degrees[0];
    resolve(n);
    GradedHopfData h = hopf_data(*tower, route, g, n);
    if (req.op == "coproduct") {
      for (const Label& x : h.basis(n)) rows.push_back(Json{{"x", x.str()}, {"value", gv_str(h.coproduct(x))}});
    } else {
      auto s = antipode(h, n);
      for (const Label& x : h.basis(n)) rows.push_back(Json{{"x", x.str()}, {"value", gv_str(s.at(x))}});
    }
  } else if (req.op == "pairing") {
    need_degrees(1);
    const int n = req.degrees[0];
    route = req.route == "auto" ? resolve_route(req.tower, "pairing", req.group, n) : req.route;
    check_cap(req.tower, route, n);
    const auto labels = labels_for(req.tower, n);
    columns = {"p", "v", "value"};
    const PairingMatrix p = route == "character" ? character_pairing(n) : module_pairing(*tower, n);
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = 0; j < labels.size(); ++j)
        rows.push_back(Json{{"p", labels[i].str()}, {"v", labels[j].str()}, {"value", p.blocks[n][i][j].get_str()}});
  } else if (req.op == "characters") {
    if (req.tower != "sym") throw UsageError("characters are tabulated for sym only");
    need_degrees(1);
    const int n = req.degrees[0];
    route = "character";
    check_cap(req.tower, route, n);
    columns = {"lambda", "mu", "value"};
    for (const Partition& lam : partitions(n))
      for (const Partition& mu : partitions(n))
        rows.push_back(Json{{"lambda", Label::of(lam).str()}, {"mu", Label::of(mu).str()},
                            {"value", mn_character(lam, mu).get_str()}});
  } else if (req.op == "module-bases") {
    if (req.tower != "hecke0") throw UsageError("module-bases are tabulated for hecke0 only");
    std::vector<Composition> comps;
    if (!req.composition.empty()) {
      comps.push_back(Composition::parse(req.composition));
    } else {
      need_degrees(1);
      comps = compositions(req.degrees[0]);
    }
    route = "module";
    columns = {"composition", "element", "value"};
    for (const auto& c : comps) {
      check_cap(req.tower, route, c.weight());
      const HeckeTower& h = static_cast<const HeckeTower&>(*tower);
      const std::string name = Label::of(c).str();
      rows.push_back(Json{{"composition", name}, {"element", "eta"}, {"value", hecke_str(eta(c))}});
      rows.push_back(Json{{"composition", name}, {"element", "nu"}, {"value", hecke_str(nu(c))}});
      const auto interval = weak_interval(alpha(c), omega(c));
      const auto basis = h.projective_basis(c);
      for (size_t i = 0; i < basis.size(); ++i)
        rows.push_back(Json{{"composition", name},
                            {"element", "T[" + interval[i].str() + "]*box[" + alpha(c.mirror().conjugate()).str() + "]"},
                            {"value", hecke_str(basis[i])}});
    }
  }

  Json request{{"tower", req.tower}, {"op", req.op}, {"group", req.group}, {"route", route}};
  Json degrees = Json::array();
  for (int d : req.degrees) degrees.push_back(std::to_string(d));
  request["degrees"] = degrees;
  if (!req.composition.empty()) request["composition"] = req.composition;

  Document doc;
  doc.json = Json{{"request", request}, {"rows", rows}};
  {
    const auto& keys = columns;
    for (size_t i = 0; i < keys.size(); ++i) doc.csv += (i ? "," : "") + keys[i];
    doc.csv += "\n";
    for (const Json& row : rows) {
      for (size_t i = 0; i < keys.size(); ++i) doc.csv += (i ? "," : "") + csv_field(csv_value(row[keys[i]]));
      doc.csv += "\n";
    }
  }
  return doc;
}

std::string Document::json_text() const { return json.dump(2) + "\n"; }

Document to_document(const Report& r) {
  Document d;
  d.json = r.to_json();
  d.csv = r.csv_text();
  d.passed = r.passed();
  return d;
}

}  // namespace towers
