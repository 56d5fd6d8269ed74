#include "towers/hecke.hpp"

#include <algorithm>

#include "towers/errors.hpp"
#include "towers/perm_algebra.hpp"

namespace towers {

namespace {

SimpleAction hecke_action() {
  return [](int i, const Permutation& p) {
    if (p.left_ascent(i)) return std::make_pair(p.left_simple(i), 1);
    return std::make_pair(p, -1);
  };
}

int element_degree(const HeckeElement& x) {
  if (x.empty()) throw std::invalid_argument("degree of the zero Hecke element is undefined");
  return x.begin()->first.size();
}

}  // namespace

HeckeElement hecke_T(const Permutation& s) { return HeckeElement{{s, Rational(1)}}; }

HeckeElement hecke_unit(int n) { return hecke_T(Permutation::identity(n)); }

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b, const Rational& scale) {
  HeckeElement out = a;
  for (const auto& [s, c] : b) {
    Rational& v = out[s];
    v += scale * c;
    if (v == 0) out.erase(s);
  }
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (!a.empty() && !b.empty() && element_degree(a) != element_degree(b))
    throw std::invalid_argument("hecke_multiply: degree mismatch");
  const SimpleAction act = hecke_action();
  HeckeElement out;
  for (const auto& [s, x] : a)
    for (const auto& [t, y] : b) {
      auto [p, sign] = perm_basis_product(s, t, act);
      Rational& v = out[p];
      v += x * y * sign;
      if (v == 0) out.erase(p);
    }
  return out;
}

HeckeElement box_element(const Permutation& s) {
  const int n = s.size();
  HeckeElement out = hecke_unit(n);
  for (int i : s.reduced_word()) {
    HeckeElement box = hecke_add(hecke_unit(n), hecke_T(Permutation::identity(n).right_simple(i)));
    out = hecke_multiply(out, box);
  }
  return out;
}

HeckeElement eta(const Composition& c) {
  return hecke_multiply(hecke_T(omega(c.mirror())), box_element(alpha(c.conjugate())));
}

HeckeElement nu(const Composition& c) {
  return hecke_multiply(hecke_T(alpha(c)), box_element(alpha(c.mirror().conjugate())));
}

HeckeElement anti_involution(const HeckeElement& x) {
  HeckeElement out;
  for (const auto& [s, c] : x) out[s.inverse()] = c;
  return out;
}

std::string hecke_str(const HeckeElement& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : x) {
    std::string coef = c.get_str();
    if (s.empty()) {
      if (c == -1) coef = "-";
      else if (c == 1) coef = "";
      else coef += "*";
    } else if (c < 0) {
      s += " - ";
      coef = c == -1 ? "" : Rational(-c).get_str() + "*";
    } else {
      s += " + ";
      coef = c == 1 ? "" : coef + "*";
    }
    s += coef + "T[" + (p.size() == 0 ? std::string("()") : p.str()) + "]";
  }
  return s;
}

SparseQ to_sparse(const HeckeElement& x) {
  std::map<int, Rational> m;
  for (const auto& [s, c] : x) m[lex_index(s)] = c;
  return sparse_from_map(m);
}

HeckeElement from_sparse(const SparseQ& v, int n) {
  const auto perms = all_permutations(n);
  HeckeElement out;
  for (const auto& [i, c] : v) out[perms.at(i)] = c;
  return out;
}

// ---------------------------------------------------------------- tower

Algebra HeckeTower::build_algebra(int n) const { return permutation_algebra(n, hecke_action(), "T"); }

std::vector<SparseQ> HeckeTower::build_embedding(int m, int n) const { return direct_sum_images(m, n); }

std::vector<Label> HeckeTower::labels(int n) const {
  std::vector<Label> out;
  for (const auto& c : compositions(n)) out.push_back(Label::of(c));
  return out;
}

Module HeckeTower::simple_module(const Label& l) const {
  const Composition c = l.composition();
  const int n = c.weight();
  const auto d = c.descent_set();
  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(Matrix::scalar(1, std::binary_search(d.begin(), d.end(), i) ? Rational(-1) : Rational(0)));
  return Module(algebra(n), 1, std::move(gens));
}

std::vector<HeckeElement> HeckeTower::projective_basis(const Composition& c) const {
  const HeckeElement box = box_element(alpha(c.mirror().conjugate()));
  std::vector<HeckeElement> out;
  for (const auto& s : weak_interval(alpha(c), omega(c))) out.push_back(hecke_multiply(hecke_T(s), box));
  return out;
}

namespace {

Module span_module(const AlgebraPtr& a, const std::vector<SparseQ>& basis) {
  Coordinates coords(basis, a->dim());
  if (!coords.independent()) throw ComputationError("module basis is linearly dependent");
  const int d = static_cast<int>(basis.size());
  std::vector<Matrix> gens;
  for (const Generator& g : a->generators()) {
    Matrix m(d, d);
    for (int j = 0; j < d; ++j) {
      Vector c = coords.coordinates(a->multiply(g.element, basis[j]));
      for (int i = 0; i < d; ++i) m(i, j) = c[i];
    }
    gens.push_back(std::move(m));
  }
  return Module(a, d, std::move(gens));
}

}  // namespace

Module HeckeTower::projective_module(const Label& l) const {
  const Composition c = l.composition();
  const int n = c.weight();
  AlgebraPtr a = algebra(n);
  std::vector<SparseQ> basis;
  for (const auto& x : projective_basis(c)) basis.push_back(to_sparse(x));
  Module m = span_module(a, basis);
  // The ideal generated by nu_I must be exactly this span.
  Coordinates coords(basis, a->dim());
  const SparseQ v = to_sparse(nu(c));
  coords.coordinates(v);
  Echelon ideal(a->dim());
  for (int s = 0; s < a->dim(); ++s) ideal.insert(a->multiply(sparse_unit(s), v));
  if (ideal.rank() != m.dim())
    throw ComputationError("H_N(0) nu_I has dimension " + std::to_string(ideal.rank()) + ", basis has " +
                           std::to_string(m.dim()));
  return m;
}

Module HeckeTower::left_ideal(const HeckeElement& x, int n) const {
  AlgebraPtr a = algebra(n);
  const SparseQ v = to_sparse(x);
  Echelon ech(a->dim());
  std::vector<SparseQ> basis;
  for (int s = 0; s < a->dim(); ++s) {
    SparseQ y = a->multiply(sparse_unit(s), v);
    if (ech.insert(y)) basis.push_back(std::move(y));
  }
  return span_module(a, basis);
}

GVector HeckeTower::decompose_simple(const Module& m) const {
  const Algebra& a = *m.algebra();
  const auto& degrees = a.degrees();
  const int h = static_cast<int>(a.generators().size());
  std::vector<Matrix> gens = m.generator_actions();
  int d = m.dim();
  GVector out;
  while (d > 0) {
    Vector v;
    int found = -1;
    for (int pattern = 0; pattern < (1 << h) && found < 0; ++pattern) {
      Echelon ech(d);
      for (int g = 0; g < h; ++g) {
        const bool minus = pattern & (1 << (h - 1 - g));
        for (int i = 0; i < d; ++i) {
          SparseQ row;
          for (int j = 0; j < d; ++j) {
            Rational x = gens[g](i, j);
            if (i == j && minus) x += 1;
            if (x != 0) row.emplace_back(j, x);
          }
          ech.insert(row);
        }
      }
      if (ech.rank() < d) {
        v = ech.nullspace().front();
        found = pattern;
      }
    }
    if (found < 0) throw ComputationError("no common eigenvector: the action violates the 0-Hecke relations");

    LabelTuple t;
    int g = 0;
    for (int deg : degrees) {
      std::vector<int> desc;
      for (int i = 1; i < deg; ++i, ++g)
        if (found & (1 << (h - 1 - g))) desc.push_back(i);
      t.push_back(Label::of(Composition::from_descents(deg, desc)));
    }
    add_term(out, t, 1);

    // Quotient by the line spanned by v.
    int j = 0;
    while (v[j] == 0) ++j;
    std::vector<Matrix> next;
    for (const Matrix& G : gens) {
      Matrix q(d - 1, d - 1);
      for (int k = 0, kk = 0; k < d; ++k) {
        if (k == j) continue;
        for (int l = 0, ll = 0; l < d; ++l) {
          if (l == j) continue;
          q(kk, ll) = G(k, l) - G(j, l) * v[k] / v[j];
          ++ll;
        }
        ++kk;
      }
      next.push_back(std::move(q));
    }
    gens = std::move(next);
    --d;
  }
  return out;
}

std::vector<SparseQ> HeckeTower::right_coset_reps(int m, int n) const { return coset_rep_elements(m, n, false); }
std::vector<SparseQ> HeckeTower::left_coset_reps(int m, int n) const { return coset_rep_elements(m, n, true); }

// ---------------------------------------------------------------- G0 data

GVector g0_product_shuffle(const Composition& a, const Composition& b) {
  const int m = a.weight();
  Word u = alpha(a).window();
  Word v = alpha(b).window();
  for (int& x : v) x += m;
  GVector out;
  for (const Word& w : shuffle(u, v)) add_term(out, {Label::of(descent_composition(Permutation(w)))}, 1);
  return out;
}

namespace {

GVector split_descents(const Composition& c) {
  const int n = c.weight();
  const auto d = c.descent_set();
  GVector out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> left, right;
    for (int i : d) {
      if (i < k) left.push_back(i);
      if (i > k) right.push_back(i - k);
    }
    add_term(out, {Label::of(Composition::from_descents(k, left)), Label::of(Composition::from_descents(n - k, right))}, 1);
  }
  return out;
}

}  // namespace

GradedHopfData hecke_g0_combinatorial(int n_max) {
  std::vector<std::vector<Label>> basis;
  for (int d = 0; d <= n_max; ++d) {
    basis.emplace_back();
    for (const auto& c : compositions(d)) basis.back().push_back(Label::of(c));
  }
  GradedHopfData h("hecke0:g0:shuffle", n_max, basis);
  for (int a = 0; a <= n_max; ++a)
    for (const Label& x : basis[a]) {
      for (int b = 0; a + b <= n_max; ++b)
        for (const Label& y : basis[b]) h.set_product(x, y, g0_product_shuffle(x.composition(), y.composition()));
      h.set_coproduct(x, split_descents(x.composition()));
    }
  return h;
}

GradedHopfData dual_hopf_data(const GradedHopfData& g0, const std::string& name) {
  const int n_max = g0.max_degree();
  std::vector<std::vector<Label>> basis;
  for (int d = 0; d <= n_max; ++d) basis.push_back(g0.basis(d));
  GradedHopfData k0(name, n_max, basis);
  std::map<std::pair<Label, Label>, GVector> prod;
  std::map<Label, GVector> cop;
  for (int a = 0; a <= n_max; ++a)
    for (const Label& x : basis[a]) {
      cop[x];
      for (int b = 0; a + b <= n_max; ++b)
        for (const Label& y : basis[b]) prod[{x, y}];
    }
  for (int d = 0; d <= n_max; ++d)
    for (const Label& r : basis[d]) {
      for (const auto& [t, c] : g0.coproduct(r)) add_term(prod[{t[0], t[1]}], {r}, c);
    }
  for (int a = 0; a <= n_max; ++a)
    for (const Label& x : basis[a])
      for (int b = 0; a + b <= n_max; ++b)
        for (const Label& y : basis[b])
          for (const auto& [t, c] : g0.product(x, y)) add_term(cop[t[0]], {x, y}, c);
  for (auto& [xy, v] : prod) k0.set_product(xy.first, xy.second, v);
  for (auto& [x, v] : cop) k0.set_coproduct(x, v);
  return k0;
}

}  // namespace towers
