#include "towers/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "towers/errors.hpp"
#include "towers/perm_algebra.hpp"

namespace towers {

// ---------------------------------------------------------------- characters

namespace {

std::mutex mn_mu;
std::map<std::pair<Partition, Partition>, Integer> mn_cache;

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const int r = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  const int l = static_cast<int>(lambda.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  Integer total = 0;
  for (int i = 0; i < l; ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> shape;
    for (int j = 0; j < l; ++j) {
      int part = nb[j] - (l - 1 - j);
      if (part > 0) shape.push_back(part);
    }
    Integer v = mn_rec(shape, rest);
    total += between % 2 ? -v : v;
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("mn_character: weights differ");
  {
    std::lock_guard lock(mn_mu);
    if (auto it = mn_cache.find({lambda, mu}); it != mn_cache.end()) return it->second;
  }
  Integer v = mn_rec(lambda.parts(), mu.parts());
  std::lock_guard lock(mn_mu);
  mn_cache.emplace(std::make_pair(lambda, mu), v);
  return v;
}

std::vector<ClassKey> class_keys(const std::vector<int>& degrees) {
  std::vector<ClassKey> out{{}};
  for (int d : degrees) {
    std::vector<ClassKey> next;
    for (const ClassKey& k : out)
      for (const Partition& p : partitions(d)) {
        ClassKey x = k;
        x.push_back(p);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

Integer centralizer(const ClassKey& k) {
  Integer z = 1;
  for (const Partition& p : k) z *= static_cast<long>(p.z());
  return z;
}

ClassFunction::ClassFunction(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (const ClassKey& k : class_keys(degrees_)) values_.emplace(k, Rational(0));
}

ClassFunction ClassFunction::irreducible(const std::vector<Partition>& lambdas) {
  std::vector<int> degrees;
  for (const auto& l : lambdas) degrees.push_back(l.weight());
  ClassFunction f(degrees);
  for (auto& [k, v] : f.values_) {
    Integer prod = 1;
    for (size_t i = 0; i < k.size(); ++i) prod *= mn_character(lambdas[i], k[i]);
    v = prod;
  }
  return f;
}

ClassFunction ClassFunction::regular(int n) {
  ClassFunction f({n});
  f[{Partition(std::vector<int>(n, 1))}] = static_cast<long>(factorial(n));
  return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.degrees() != b.degrees()) throw std::invalid_argument("inner product of class functions on different groups");
  Rational s = 0;
  for (const auto& [k, v] : a.values()) {
    if (v == 0) continue;
    s += v * b[k] / Rational(centralizer(k));
  }
  return s;
}

ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b) {
  std::vector<int> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  ClassFunction f(degrees);
  for (const auto& [ka, va] : a.values())
    for (const auto& [kb, vb] : b.values()) {
      ClassKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      f[k] = va * vb;
    }
  return f;
}

ClassFunction induce_factors(const ClassFunction& f, size_t pos) {
  std::vector<int> degrees = f.degrees();
  if (pos + 1 >= degrees.size()) throw std::invalid_argument("induce_factors: position out of range");
  degrees[pos] += degrees[pos + 1];
  degrees.erase(degrees.begin() + pos + 1);
  ClassFunction g(degrees);
  for (const auto& [k, v] : f.values()) {
    if (v == 0) continue;
    Partition nu = k[pos].join(k[pos + 1]);
    ClassKey nk = k;
    nk[pos] = nu;
    nk.erase(nk.begin() + pos + 1);
    g[nk] += v * fraction(static_cast<long>(nu.z()), static_cast<long>(k[pos].z() * k[pos + 1].z()));
  }
  return g;
}

ClassFunction restrict_factor(const ClassFunction& f, size_t pos, int k) {
  std::vector<int> degrees = f.degrees();
  const int d = degrees.at(pos);
  if (k < 0 || k > d) throw std::invalid_argument("restrict_factor: split out of range");
  degrees[pos] = k;
  degrees.insert(degrees.begin() + pos + 1, d - k);
  ClassFunction g(degrees);
  for (auto& [key, v] : g.values()) {
    ClassKey old = key;
    old[pos] = key[pos].join(key[pos + 1]);
    old.erase(old.begin() + pos + 1);
    g[key] = f[old];
  }
  return g;
}

ClassFunction permute_factors(const ClassFunction& f, const std::vector<int>& order) {
  std::vector<int> degrees;
  for (int i : order) degrees.push_back(f.degrees().at(i));
  ClassFunction g(degrees);
  for (const auto& [k, v] : f.values()) {
    ClassKey nk;
    for (int i : order) nk.push_back(k[i]);
    g[nk] = v;
  }
  return g;
}

GVector decompose_into_irreducibles(const ClassFunction& f) {
  GVector out;
  ClassFunction rebuilt(f.degrees());
  for (const ClassKey& lambdas : class_keys(f.degrees())) {
    ClassFunction chi = ClassFunction::irreducible(lambdas);
    Rational m = inner_product(f, chi);
    if (m.get_den() != 1 || m < 0)
      throw ComputationError("class function is not a character: multiplicity " + m.get_str());
    if (m == 0) continue;
    LabelTuple t;
    for (const auto& l : lambdas) t.push_back(Label::of(l));
    add_term(out, t, m.get_num());
    for (auto& [k, v] : chi.values()) rebuilt[k] += m * v;
  }
  if (!(rebuilt == f)) throw ComputationError("irreducible decomposition does not reconstruct the class function");
  return out;
}

SymFunctionP frobenius_ch(const ClassFunction& f) {
  if (f.degrees().size() != 1) throw std::invalid_argument("frobenius_ch: class function on a single S_n expected");
  SymFunctionP out;
  for (const auto& [k, v] : f.values())
    if (v != 0) out[k[0]] = v / Rational(static_cast<long>(k[0].z()));
  return out;
}

SymFunctionP multiply(const SymFunctionP& a, const SymFunctionP& b) {
  SymFunctionP out;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) out[p.join(q)] += x * y;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

// ---------------------------------------------------------------- tower

namespace {

SimpleAction group_action() {
  return [](int i, const Permutation& p) { return std::make_pair(p.left_simple(i), 1); };
}

// Standard Young tableaux as row/column positions of 1..n.
struct Tableau {
  std::vector<int> row, col;
};

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  const int n = shape.weight();
  std::vector<Tableau> out;
  std::vector<int> filled(shape.length(), 0);
  Tableau cur{std::vector<int>(n), std::vector<int>(n)};
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (filled[r] >= shape.parts()[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      cur.row[k] = r;
      cur.col[k] = filled[r];
      ++filled[r];
      rec(k + 1);
      --filled[r];
    }
  };
  rec(0);
  return out;
}

Permutation cycle_type_rep(const Partition& mu) {
  std::vector<int> w;
  int start = 1;
  for (int part : mu.parts()) {
    for (int j = 0; j < part; ++j) w.push_back(start + (j + 1) % part);
    start += part;
  }
  return Permutation(std::move(w));
}

}  // namespace

Algebra SymmetricTower::build_algebra(int n) const { return permutation_algebra(n, group_action(), "s"); }

std::vector<SparseQ> SymmetricTower::build_embedding(int m, int n) const { return direct_sum_images(m, n); }

std::vector<Label> SymmetricTower::labels(int n) const {
  std::vector<Label> out;
  for (const auto& p : partitions(n)) out.push_back(Label::of(p));
  return out;
}

Module SymmetricTower::simple_module(const Label& l) const {
  const Partition shape = l.partition();
  const int n = shape.weight();
  const auto tabs = standard_tableaux(shape);
  const int d = static_cast<int>(tabs.size());
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  for (int t = 0; t < d; ++t) index[{tabs[t].row, tabs[t].col}] = t;

  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i) {
    Matrix m(d, d);
    for (int t = 0; t < d; ++t) {
      const Tableau& tab = tabs[t];
      const int a = i - 1, b = i;  // entries i and i+1
      const int r = (tab.col[b] - tab.row[b]) - (tab.col[a] - tab.row[a]);
      m(t, t) = fraction(1, r);
      if (tab.row[a] == tab.row[b] || tab.col[a] == tab.col[b]) continue;
      Tableau sw = tab;
      std::swap(sw.row[a], sw.row[b]);
      std::swap(sw.col[a], sw.col[b]);
      const int u = index.at({sw.row, sw.col});
      m(u, t) = r < 0 ? Rational(1) : Rational(1) - fraction(1, r * r);
    }
    gens.push_back(std::move(m));
  }
  Module mod(algebra(n), d, std::move(gens));
  mod.verify();
  return mod;
}

ClassFunction SymmetricTower::character(const Module& m) const {
  const auto& degrees = m.algebra()->degrees();
  ClassFunction f(degrees);
  for (auto& [k, v] : f.values()) {
    int idx = 0;
    for (size_t i = 0; i < k.size(); ++i)
      idx = idx * static_cast<int>(factorial(degrees[i])) + lex_index(cycle_type_rep(k[i]));
    f[k] = m.basis_action(idx).trace();
  }
  return f;
}

GVector SymmetricTower::decompose_simple(const Module& m) const { return decompose_into_irreducibles(character(m)); }

std::vector<SparseQ> SymmetricTower::right_coset_reps(int m, int n) const { return coset_rep_elements(m, n, false); }
std::vector<SparseQ> SymmetricTower::left_coset_reps(int m, int n) const { return coset_rep_elements(m, n, true); }

// ---------------------------------------------------------------- data

GradedHopfData sym_character_hopf_data(int n_max) {
  std::vector<std::vector<Label>> basis;
  for (int d = 0; d <= n_max; ++d) {
    basis.emplace_back();
    for (const auto& p : partitions(d)) basis.back().push_back(Label::of(p));
  }
  GradedHopfData h("sym:characters", n_max, basis);
  for (int a = 0; a <= n_max; ++a)
    for (const Label& x : basis[a]) {
      ClassFunction chi = ClassFunction::irreducible({x.partition()});
      for (int b = 0; a + b <= n_max; ++b)
        for (const Label& y : basis[b]) {
          ClassFunction prod = outer_product(chi, ClassFunction::irreducible({y.partition()}));
          h.set_product(x, y, decompose_into_irreducibles(induce_factors(prod, 0)));
        }
      GVector cop;
      for (int k = 0; k <= a; ++k) cop = add(cop, decompose_into_irreducibles(restrict_factor(chi, 0, k)));
      h.set_coproduct(x, cop);
    }
  return h;
}

Report sym_condition5_characters(int n_max) {
  Report r;
  for (int total = 2; total <= n_max; ++total)
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      for (const Partition& lam : partitions(m))
        for (const Partition& mu : partitions(n)) {
          ClassFunction a = ClassFunction::irreducible({lam});
          ClassFunction b = ClassFunction::irreducible({mu});
          ClassFunction ind = induce_factors(outer_product(a, b), 0);
          for (int k = 1; k < total; ++k) {
            GVector lhs = decompose_into_irreducibles(restrict_factor(ind, 0, k));
            GVector rhs;
            for (int s = std::max(0, k - m); s <= std::min(k, n); ++s) {
              const int t = k - s;
              ClassFunction four = outer_product(restrict_factor(a, 0, t), restrict_factor(b, 0, s));
              ClassFunction twisted = induce_factors(induce_factors(permute_factors(four, {0, 2, 1, 3}), 0), 1);
              rhs = add(rhs, decompose_into_irreducibles(twisted));
            }
            Cell c;
            c.identity = "condition5";
            c.inputs = Json{{"x", Label::of(lam).str()}, {"y", Label::of(mu).str()}, {"k", std::to_string(k)}};
            c.lhs = gv_json(lhs);
            c.rhs = gv_json(rhs);
            c.equal = lhs == rhs;
            r.add(c);
          }
        }
    }
  return r;
}

}  // namespace towers
