#include "towers/hopf.hpp"

#include <algorithm>

#include "towers/errors.hpp"

namespace towers {

// ---------------------------------------------------------------- labels

Label Label::parse(LabelKind kind, const std::string& text) {
  if (text.empty() || text == "()") return empty(kind);
  switch (kind) {
    case LabelKind::partition:
      return of(Partition::parse(text));
    case LabelKind::composition:
      return of(Composition::parse(text));
    case LabelKind::word: {
      std::vector<int> letters;
      for (char ch : text) {
        if (ch == 'T')
          letters.push_back(0);
        else if (ch == 'S')
          letters.push_back(1);
        else
          throw std::invalid_argument("word labels use the letters T and S: " + text);
      }
      return word(std::move(letters));
    }
  }
  throw std::invalid_argument("unknown label kind");
}

int Label::degree() const {
  if (kind == LabelKind::word) return static_cast<int>(parts.size());
  int d = 0;
  for (int p : parts) d += p;
  return d;
}

std::string Label::str() const {
  if (parts.empty()) return "()";
  if (kind == LabelKind::word) {
    std::string s;
    for (int x : parts) s += x ? 'S' : 'T';
    return s;
  }
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::strong_ordering Label::operator<=>(const Label& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  if (auto c = kind <=> rhs.kind; c != 0) return c;
  switch (kind) {
    case LabelKind::partition:
      return rhs.parts <=> parts;
    case LabelKind::composition:
      return composition() <=> rhs.composition();
    case LabelKind::word:
      return parts <=> rhs.parts;
  }
  return std::strong_ordering::equal;
}

std::string tuple_str(const LabelTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + t[i].str();
  return s;
}

// ---------------------------------------------------------------- vectors

void add_term(GVector& v, const LabelTuple& t, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

GVector add(const GVector& a, const GVector& b, const Integer& scale) {
  GVector out = a;
  for (const auto& [t, c] : b) add_term(out, t, scale * c);
  return out;
}

GVector basis_vector(const LabelTuple& t) { return GVector{{t, Integer(1)}}; }
GVector basis_vector(const Label& l) { return basis_vector(LabelTuple{l}); }

GVector tensor(const GVector& a, const GVector& b) {
  GVector out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      LabelTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      add_term(out, t, ca * cb);
    }
  return out;
}

std::string gv_str(const GVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : v) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "*";
    s += "[" + tuple_str(t) + "]";
  }
  return s;
}

Json gv_json(const GVector& v) {
  Json j = Json::object();
  for (const auto& [t, c] : v) j[tuple_str(t)] = c.get_str();
  return j;
}

// ---------------------------------------------------------------- Hopf data

GradedHopfData::GradedHopfData(std::string name, int max_degree, std::vector<std::vector<Label>> basis)
    : name_(std::move(name)), max_degree_(max_degree), basis_(std::move(basis)) {
  if (static_cast<int>(basis_.size()) != max_degree_ + 1) throw std::invalid_argument("basis list does not match the degree bound");
  if (basis_[0].size() != 1) throw ComputationError("degree 0 must have exactly one basis label");
}

const std::vector<Label>& GradedHopfData::basis(int n) const {
  if (n < 0 || n > max_degree_) throw UsageError("degree " + std::to_string(n) + " is beyond the stored truncation");
  return basis_[n];
}

void GradedHopfData::set_product(const Label& a, const Label& b, GVector value) {
  product_[{a, b}] = std::move(value);
}

void GradedHopfData::set_coproduct(const Label& g, GVector value) { coproduct_[g] = std::move(value); }

const GVector& GradedHopfData::product(const Label& a, const Label& b) const {
  if (a.degree() + b.degree() > max_degree_)
    throw UsageError("product " + a.str() + "*" + b.str() + " exceeds the truncation degree " + std::to_string(max_degree_));
  auto it = product_.find({a, b});
  if (it == product_.end()) throw ComputationError("missing product constants for " + a.str() + "*" + b.str());
  return it->second;
}

const GVector& GradedHopfData::coproduct(const Label& g) const {
  if (g.degree() > max_degree_) throw UsageError("coproduct of " + g.str() + " exceeds the truncation degree");
  auto it = coproduct_.find(g);
  if (it == coproduct_.end()) throw ComputationError("missing coproduct constants for " + g.str());
  return it->second;
}

GVector GradedHopfData::multiply(const GVector& x, const GVector& y) const {
  return multiply_at(tensor(x, y), 0);
}

GVector GradedHopfData::multiply_at(const GVector& x, size_t pos) const {
  GVector out;
  for (const auto& [t, c] : x) {
    for (const auto& [u, d] : product(t.at(pos), t.at(pos + 1))) {
      LabelTuple r(t.begin(), t.begin() + pos);
      r.push_back(u.at(0));
      r.insert(r.end(), t.begin() + pos + 2, t.end());
      add_term(out, r, c * d);
    }
  }
  return out;
}

GVector GradedHopfData::comultiply_at(const GVector& x, size_t pos) const {
  GVector out;
  for (const auto& [t, c] : x) {
    for (const auto& [u, d] : coproduct(t.at(pos))) {
      LabelTuple r(t.begin(), t.begin() + pos);
      r.insert(r.end(), u.begin(), u.end());
      r.insert(r.end(), t.begin() + pos + 1, t.end());
      add_term(out, r, c * d);
    }
  }
  return out;
}

GVector GradedHopfData::counit_at(const GVector& x, size_t pos) const {
  GVector out;
  for (const auto& [t, c] : x) {
    Integer e = counit(t.at(pos));
    if (e == 0) continue;
    LabelTuple r = t;
    r.erase(r.begin() + pos);
    add_term(out, r, c * e);
  }
  return out;
}

GVector GradedHopfData::multiply_tensors(const GVector& x, const GVector& y) const {
  GVector out;
  for (const auto& [tx, cx] : x)
    for (const auto& [ty, cy] : y) {
      if (tx.size() != ty.size()) throw std::invalid_argument("multiply_tensors: arity mismatch");
      GVector acc{{LabelTuple{}, cx * cy}};
      for (size_t i = 0; i < tx.size(); ++i) acc = tensor(acc, product(tx[i], ty[i]));
      out = add(out, acc);
    }
  return out;
}

bool GradedHopfData::is_commutative() const {
  for (const auto& [ab, v] : product_) {
    auto it = product_.find({ab.second, ab.first});
    if (it == product_.end() || it->second != v) return false;
  }
  return true;
}

bool GradedHopfData::is_cocommutative() const {
  for (const auto& [g, v] : coproduct_) {
    GVector flipped;
    for (const auto& [t, c] : v) add_term(flipped, LabelTuple{t.at(1), t.at(0)}, c);
    if (flipped != v) return false;
  }
  return true;
}

Json GradedHopfData::to_json() const {
  Json j;
  j["name"] = name_;
  j["max_degree"] = std::to_string(max_degree_);
  Json basis = Json::array();
  for (const auto& level : basis_) {
    Json l = Json::array();
    for (const auto& b : level) l.push_back(b.str());
    basis.push_back(l);
  }
  j["basis"] = basis;
  Json prod = Json::array();
  for (const auto& [ab, v] : product_)
    prod.push_back(Json{{"left", ab.first.str()}, {"right", ab.second.str()}, {"value", gv_json(v)}});
  j["product"] = prod;
  Json cop = Json::array();
  for (const auto& [g, v] : coproduct_) cop.push_back(Json{{"label", g.str()}, {"value", gv_json(v)}});
  j["coproduct"] = cop;
  return j;
}

PairingMatrix PairingMatrix::identity(const GradedHopfData& k0, const GradedHopfData& g0, int n_max) {
  PairingMatrix p = zero(k0, g0, n_max);
  for (int n = 0; n <= n_max; ++n)
    for (size_t i = 0; i < p.blocks[n].size() && i < p.blocks[n][i].size(); ++i) p.blocks[n][i][i] = 1;
  return p;
}

PairingMatrix PairingMatrix::zero(const GradedHopfData& k0, const GradedHopfData& g0, int n_max) {
  PairingMatrix p;
  for (int n = 0; n <= n_max; ++n)
    p.blocks.emplace_back(k0.basis(n).size(), std::vector<Integer>(g0.basis(n).size(), Integer(0)));
  return p;
}

// ---------------------------------------------------------------- checkers

namespace {

std::vector<Label> labels_upto(const GradedHopfData& h, int n) {
  std::vector<Label> out;
  for (int d = 0; d <= n; ++d)
    for (const Label& l : h.basis(d)) out.push_back(l);
  return out;
}

Cell vector_cell(std::string identity, Json inputs, const GVector& lhs, const GVector& rhs) {
  Cell c;
  c.identity = std::move(identity);
  c.inputs = std::move(inputs);
  c.lhs = gv_json(lhs);
  c.rhs = gv_json(rhs);
  c.equal = lhs == rhs;
  return c;
}

Cell scalar_cell(std::string identity, Json inputs, const Integer& lhs, const Integer& rhs) {
  Cell c;
  c.identity = std::move(identity);
  c.inputs = std::move(inputs);
  c.lhs = lhs.get_str();
  c.rhs = rhs.get_str();
  c.equal = lhs == rhs;
  return c;
}

GVector first_degree(const GVector& v, int k) {
  GVector out;
  for (const auto& [t, c] : v)
    if (t.at(0).degree() == k) out.emplace(t, c);
  return out;
}

// The recursion without the final verification.
std::map<Label, GVector> antipode_raw(const GradedHopfData& h, int n) {
  std::map<Label, GVector> s;
  s[h.unit()] = basis_vector(h.unit());
  for (int d = 1; d <= n; ++d) {
    for (const Label& x : h.basis(d)) {
      GVector acc;
      for (const auto& [t, c] : h.coproduct(x)) {
        if (t[0].degree() == d) continue;  // the x (x) 1 term is what we solve for
        acc = add(acc, h.multiply(s.at(t[0]), basis_vector(t[1])), -c);
      }
      s[x] = std::move(acc);
    }
  }
  return s;
}

GVector apply_map(const std::map<Label, GVector>& f, const GVector& v) {
  GVector out;
  for (const auto& [t, c] : v) out = add(out, f.at(t.at(0)), c);
  return out;
}

GVector convolution_left(const GradedHopfData& h, const std::map<Label, GVector>& s, const Label& x) {
  GVector out;
  for (const auto& [t, c] : h.coproduct(x)) out = add(out, h.multiply(s.at(t[0]), basis_vector(t[1])), c);
  return out;
}

GVector convolution_right(const GradedHopfData& h, const std::map<Label, GVector>& s, const Label& x) {
  GVector out;
  for (const auto& [t, c] : h.coproduct(x)) out = add(out, h.multiply(basis_vector(t[0]), s.at(t[1])), c);
  return out;
}

GVector unit_times_counit(const GradedHopfData& h, const Label& x) {
  GVector v;
  add_term(v, {h.unit()}, h.counit(x));
  return v;
}

}  // namespace

Report check_bialgebra(const GradedHopfData& h, int n) {
  Report r;
  const auto all = labels_upto(h, n);
  const GVector one = basis_vector(h.unit());
  for (const Label& x : all) {
    GVector vx = basis_vector(x);
    r.add(vector_cell("unit_left", {{"x", x.str()}}, h.multiply(one, vx), vx));
    r.add(vector_cell("unit_right", {{"x", x.str()}}, h.multiply(vx, one), vx));
  }
  for (const Label& x : all) {
    GVector vx = basis_vector(x);
    GVector cop = h.comultiply_at(vx, 0);
    r.add(vector_cell("counit_left", {{"x", x.str()}}, h.counit_at(cop, 0), vx));
    r.add(vector_cell("counit_right", {{"x", x.str()}}, h.counit_at(cop, 1), vx));
  }
  for (const Label& a : all)
    for (const Label& b : all) {
      if (a.degree() + b.degree() > n) continue;
      for (const Label& c : all) {
        if (a.degree() + b.degree() + c.degree() > n) continue;
        GVector va = basis_vector(a), vb = basis_vector(b), vc = basis_vector(c);
        r.add(vector_cell("associativity", {{"x", a.str()}, {"y", b.str()}, {"z", c.str()}},
                          h.multiply(h.multiply(va, vb), vc), h.multiply(va, h.multiply(vb, vc))));
      }
    }
  for (const Label& x : all) {
    GVector cop = h.comultiply_at(basis_vector(x), 0);
    r.add(vector_cell("coassociativity", {{"x", x.str()}}, h.comultiply_at(cop, 0), h.comultiply_at(cop, 1)));
  }
  for (const Label& a : all)
    for (const Label& b : all) {
      if (a.degree() + b.degree() > n) continue;
      GVector lhs = h.comultiply_at(h.multiply(basis_vector(a), basis_vector(b)), 0);
      GVector rhs = h.multiply_tensors(h.comultiply_at(basis_vector(a), 0), h.comultiply_at(basis_vector(b), 0));
      r.add(vector_cell("compatibility", {{"x", a.str()}, {"y", b.str()}}, lhs, rhs));
    }
  return r;
}

std::map<Label, GVector> antipode(const GradedHopfData& h, int n) {
  auto s = antipode_raw(h, n);
  for (const Label& x : labels_upto(h, n)) {
    GVector lhs = convolution_left(h, s, x);
    if (lhs != unit_times_counit(h, x))
      throw ComputationError("antipode identity fails at " + x.str() + ": got " + gv_str(lhs));
  }
  return s;
}

Report check_antipode(const GradedHopfData& h, int n) {
  Report r;
  auto s = antipode_raw(h, n);
  const auto all = labels_upto(h, n);
  for (const Label& x : all) {
    r.add(vector_cell("antipode_left", {{"x", x.str()}}, convolution_left(h, s, x), unit_times_counit(h, x)));
    r.add(vector_cell("antipode_right", {{"x", x.str()}}, convolution_right(h, s, x), unit_times_counit(h, x)));
  }
  if (h.is_commutative() || h.is_cocommutative()) {
    for (const Label& x : all) r.add(vector_cell("antipode_involution", {{"x", x.str()}}, apply_map(s, s.at(x)), basis_vector(x)));
  }
  return r;
}

Report check_duality(const GradedHopfData& g0, const GradedHopfData& k0, const PairingMatrix& p, int n) {
  if (static_cast<int>(p.blocks.size()) <= n) throw UsageError("pairing matrix does not cover degree " + std::to_string(n));
  std::map<Label, int> krow, gcol;
  for (int d = 0; d <= n; ++d) {
    const auto& kb = k0.basis(d);
    const auto& gb = g0.basis(d);
    if (kb.size() != gb.size())
      throw UsageError("K0 and G0 bases differ in size at degree " + std::to_string(d));
    if (p.blocks[d].size() != kb.size())
      throw UsageError("pairing block has the wrong shape at degree " + std::to_string(d));
    for (const auto& row : p.blocks[d])
      if (row.size() != gb.size()) throw UsageError("pairing block has the wrong shape at degree " + std::to_string(d));
    for (size_t i = 0; i < kb.size(); ++i) krow[kb[i]] = static_cast<int>(i);
    for (size_t i = 0; i < gb.size(); ++i) gcol[gb[i]] = static_cast<int>(i);
  }
  auto pair = [&](const GVector& kv, const GVector& gv) {
    Integer total = 0;
    for (const auto& [tk, ck] : kv)
      for (const auto& [tg, cg] : gv) {
        if (tk.size() != tg.size()) throw std::invalid_argument("pairing of tuples with different arity");
        Integer v = ck * cg;
        for (size_t i = 0; i < tk.size() && v != 0; ++i) {
          if (tk[i].degree() != tg[i].degree()) {
            v = 0;
            break;
          }
          v *= p.blocks[tk[i].degree()][krow.at(tk[i])][gcol.at(tg[i])];
        }
        total += v;
      }
    return total;
  };

  Report r;
  const auto kall = labels_upto(k0, n);
  const auto gall = labels_upto(g0, n);
  for (const Label& a : kall)
    for (const Label& b : kall) {
      if (a.degree() + b.degree() > n) continue;
      for (const Label& m : g0.basis(a.degree() + b.degree())) {
        Integer lhs = pair(k0.multiply(basis_vector(a), basis_vector(b)), basis_vector(m));
        Integer rhs = pair(basis_vector(LabelTuple{a, b}), g0.comultiply_at(basis_vector(m), 0));
        r.add(scalar_cell("pairing_product", {{"p", a.str()}, {"q", b.str()}, {"m", m.str()}}, lhs, rhs));
      }
    }
  for (const Label& a : gall)
    for (const Label& b : gall) {
      if (a.degree() + b.degree() > n) continue;
      for (const Label& q : k0.basis(a.degree() + b.degree())) {
        Integer lhs = pair(k0.comultiply_at(basis_vector(q), 0), basis_vector(LabelTuple{a, b}));
        Integer rhs = pair(basis_vector(q), g0.multiply(basis_vector(a), basis_vector(b)));
        r.add(scalar_cell("pairing_coproduct", {{"p", q.str()}, {"m", a.str()}, {"n", b.str()}}, lhs, rhs));
      }
    }
  for (const Label& m : gall)
    r.add(scalar_cell("pairing_unit", {{"m", m.str()}}, pair(basis_vector(k0.unit()), basis_vector(m)), g0.counit(m)));
  for (const Label& q : kall)
    r.add(scalar_cell("pairing_counit", {{"p", q.str()}}, pair(basis_vector(q), basis_vector(g0.unit())), k0.counit(q)));
  return r;
}

Report check_asas(const GradedHopfData& h, int n) {
  Report r;
  const auto all = labels_upto(h, n);
  for (const Label& x : all)
    for (const Label& y : all) {
      const int m = x.degree(), l = y.degree();
      if (m + l > n) continue;
      GVector vx = basis_vector(x), vy = basis_vector(y);
      GVector full = h.comultiply_at(h.multiply(vx, vy), 0);
      for (int k = 0; k <= m + l; ++k) {
        GVector lhs = first_degree(full, k);
        GVector rhs;
        if (k < m) {
          // x' (x) x'' y
          GVector split = first_degree(h.comultiply_at(vx, 0), k);
          rhs = h.multiply_at(tensor(split, vy), 1);
        } else if (k == m) {
          rhs = tensor(vx, vy);
        } else {
          // x y' (x) y''
          GVector split = first_degree(h.comultiply_at(vy, 0), k - m);
          rhs = h.multiply_at(tensor(vx, split), 0);
        }
        r.add(vector_cell("asas", {{"x", x.str()}, {"y", y.str()}, {"k", std::to_string(k)}}, lhs, rhs));
      }
    }
  return r;
}

Report check_compatibility_cells(const GradedHopfData& h, int n) {
  Report r;
  const auto all = labels_upto(h, n);
  for (const Label& x : all)
    for (const Label& y : all) {
      const int m = x.degree(), l = y.degree();
      if (m == 0 || l == 0 || m + l > n) continue;
      GVector vx = basis_vector(x), vy = basis_vector(y);
      GVector lhs = h.comultiply_at(h.multiply(vx, vy), 0);
      GVector rhs = h.multiply_tensors(h.comultiply_at(vx, 0), h.comultiply_at(vy, 0));
      for (int k = 1; k < m + l; ++k)
        r.add(vector_cell("condition5", {{"x", x.str()}, {"y", y.str()}, {"k", std::to_string(k)}},
                          first_degree(lhs, k), first_degree(rhs, k)));
    }
  return r;
}

}  // namespace towers
