#include "towers/tower.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "towers/errors.hpp"

namespace towers {

// ---------------------------------------------------------------- Tower

void Tower::check_degree(int n) const {
  if (n < 0) throw UsageError("negative degree");
  if (n > algebra_cap())
    throw DegreeCapError(name() + ": degree " + std::to_string(n) + " exceeds the module-level cap " +
                     std::to_string(algebra_cap()));
}

AlgebraPtr Tower::algebra(int n) const {
  check_degree(n);
  {
    std::lock_guard lock(mu_);
    if (auto it = algebras_.find(n); it != algebras_.end()) return it->second;
  }
  auto a = std::make_shared<Algebra>(build_algebra(n));
  a->verify();
  std::lock_guard lock(mu_);
  return algebras_.emplace(n, std::move(a)).first->second;
}

AlgebraPtr Tower::tensor_algebra(const std::vector<int>& degrees) const {
  if (degrees.empty()) throw std::invalid_argument("tensor_algebra: no factors");
  if (degrees.size() == 1) return algebra(degrees[0]);
  {
    std::lock_guard lock(mu_);
    if (auto it = tensors_.find(degrees); it != tensors_.end()) return it->second;
  }
  std::vector<int> prefix(degrees.begin(), degrees.end() - 1);
  auto a = std::make_shared<Algebra>(tensor_product(*tensor_algebra(prefix), *algebra(degrees.back())));
  std::lock_guard lock(mu_);
  return tensors_.emplace(degrees, std::move(a)).first->second;
}

std::shared_ptr<const Embedding> Tower::embedding(int m, int n) const {
  check_degree(m + n);
  {
    std::lock_guard lock(mu_);
    if (auto it = embeddings_.find({m, n}); it != embeddings_.end()) return it->second;
  }
  auto e = std::make_shared<Embedding>();
  e->source = tensor_algebra({m, n});
  e->target = algebra(m + n);
  e->images = build_embedding(m, n);
  if (static_cast<int>(e->images.size()) != e->source->dim()) throw ComputationError("embedding has the wrong number of images");
  std::lock_guard lock(mu_);
  if (corruption_ && corruption_->m == m && corruption_->n == n) {
    std::swap(e->images.at(corruption_->a), e->images.at(corruption_->b));
  }
  return embeddings_.emplace(std::make_pair(m, n), std::move(e)).first->second;
}

void Tower::corrupt_embedding(int m, int n, int a, int b) {
  std::lock_guard lock(mu_);
  corruption_ = Corruption{m, n, a, b};
  embeddings_.clear();
}

namespace {

Module fold_modules(const Tower& tower, const LabelTuple& t, const std::function<Module(const Label&)>& make) {
  if (t.empty()) throw std::invalid_argument("empty label tuple");
  Module acc = make(t[0]);
  std::vector<int> degrees{t[0].degree()};
  for (size_t i = 1; i < t.size(); ++i) {
    degrees.push_back(t[i].degree());
    acc = tensor_modules(tower.tensor_algebra(degrees), acc, make(t[i]));
  }
  return acc;
}

std::vector<LabelTuple> label_tuples(const Tower& t, const std::vector<int>& degrees) {
  std::vector<LabelTuple> out{{}};
  for (int d : degrees) {
    std::vector<LabelTuple> next;
    for (const LabelTuple& prefix : out)
      for (const Label& l : t.labels(d)) {
        LabelTuple x = prefix;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Module Tower::simple_tuple(const LabelTuple& t) const {
  return fold_modules(*this, t, [this](const Label& l) { return simple_module(l); });
}

Module Tower::projective_tuple(const LabelTuple& t) const {
  return fold_modules(*this, t, [this](const Label& l) { return projective_module(l); });
}

GVector Tower::decompose_projective(const Module& m) const {
  GVector out;
  int total = 0;
  for (const LabelTuple& t : label_tuples(*this, m.algebra()->degrees())) {
    const int mult = pairing_dim_hom(m, simple_tuple(t));
    if (mult == 0) continue;
    add_term(out, t, mult);
    total += mult * projective_tuple(t).dim();
  }
  if (total != m.dim())
    throw ComputationError("projective decomposition accounts for dimension " + std::to_string(total) + " of " +
                           std::to_string(m.dim()));
  return out;
}

// ---------------------------------------------------------------- modules

namespace {

int single_degree(const Module& m) {
  if (m.algebra()->degrees().size() != 1) throw std::invalid_argument("module over a single A_n expected");
  return m.algebra()->degrees()[0];
}

int quotient_rank(const Algebra& target, const Algebra& source) {
  if (target.dim() % source.dim() != 0) throw ComputationError("subalgebra dimension does not divide");
  return target.dim() / source.dim();
}

}  // namespace

Module induce(const Tower& t, const Module& m, const Module& n) {
  const int a = single_degree(m), b = single_degree(n);
  return induce_pair(t, tensor_modules(t.tensor_algebra({a, b}), m, n));
}

Module induce_pair(const Tower& t, const Module& mn) {
  const auto& d = mn.algebra()->degrees();
  if (d.size() != 2) throw std::invalid_argument("induce_pair: module over A_m (x) A_n expected");
  auto emb = t.embedding(d[0], d[1]);
  return induce_along(*emb, mn, quotient_rank(*emb->target, *emb->source) * mn.dim());
}

Module restrict(const Tower& t, const Module& m, int k) {
  const int n = single_degree(m);
  if (k < 0 || k > n) throw std::invalid_argument("restrict: split out of range");
  return restrict_along(*t.embedding(k, n - k), m);
}

Module twisted_induce(const Tower& t, const Module& res_m, const Module& res_n) {
  const auto& dm = res_m.algebra()->degrees();
  const auto& dn = res_n.algebra()->degrees();
  if (dm.size() != 2 || dn.size() != 2) throw std::invalid_argument("twisted_induce: restricted modules expected");
  const int t1 = dm[0], t2 = dm[1], s1 = dn[0], s2 = dn[1];

  Embedding emb;
  emb.source = t.tensor_algebra({t1, t2, s1, s2});
  emb.target = t.tensor_algebra({t1 + s1, t2 + s2});
  auto rho1 = t.embedding(t1, s1);
  auto rho2 = t.embedding(t2, s2);
  const int a1 = t.algebra(t1)->dim(), a2 = t.algebra(t2)->dim();
  const int b1 = t.algebra(s1)->dim(), b2 = t.algebra(s2)->dim();
  const int right = t.algebra(t2 + s2)->dim();
  emb.images.resize(static_cast<size_t>(a1) * a2 * b1 * b2);
  for (int c1 = 0; c1 < a1; ++c1)
    for (int c2 = 0; c2 < a2; ++c2)
      for (int d1 = 0; d1 < b1; ++d1)
        for (int d2 = 0; d2 < b2; ++d2) {
          const SparseQ& x = rho1->images[c1 * b1 + d1];
          const SparseQ& y = rho2->images[c2 * b2 + d2];
          SparseQ img;
          for (const auto& [i, p] : x)
            for (const auto& [j, q] : y) img.emplace_back(i * right + j, p * q);
          std::sort(img.begin(), img.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
          emb.images[((c1 * a2 + c2) * b1 + d1) * b2 + d2] = std::move(img);
        }
  Module w = tensor_modules(emb.source, res_m, res_n);
  return induce_along(emb, w, quotient_rank(*emb.target, *emb.source) * w.dim());
}

// ---------------------------------------------------------------- checks

namespace {

Json sparse_json(const Algebra& a, const SparseQ& v) {
  Json j = Json::object();
  for (const auto& [i, c] : v) j[a.basis_labels()[i]] = c.get_str();
  return j;
}

Cell int_cell(std::string identity, Json inputs, long long lhs, long long rhs, bool equal) {
  Cell c;
  c.identity = std::move(identity);
  c.inputs = std::move(inputs);
  c.lhs = std::to_string(lhs);
  c.rhs = std::to_string(rhs);
  c.equal = equal;
  return c;
}

Json mn_inputs(int m, int n) { return Json{{"m", std::to_string(m)}, {"n", std::to_string(n)}}; }

SparseQ tensor_sparse(const SparseQ& x, const SparseQ& y, int dim_right) {
  SparseQ out;
  for (const auto& [i, p] : x)
    for (const auto& [j, q] : y) out.emplace_back(i * dim_right + j, p * q);
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

}  // namespace

Report check_conditions12(const Tower& t, int n) {
  Report r;
  r.add(int_cell("a0_dimension", Json::object(), t.algebra(0)->dim(), 1, t.algebra(0)->dim() == 1));
  for (int total = 0; total <= n; ++total)
    for (int m = 0; m <= total; ++m) {
      const int k = total - m;
      auto emb = t.embedding(m, k);
      const Algebra& src = *emb->source;
      const Algebra& tgt = *emb->target;

      Echelon ech(tgt.dim());
      for (const SparseQ& v : emb->images) ech.insert(v);
      r.add(int_cell("injective", mn_inputs(m, k), ech.rank(), src.dim(), ech.rank() == src.dim()));

      Cell unital;
      unital.identity = "unital";
      unital.inputs = mn_inputs(m, k);
      SparseQ u = emb->apply(src.unit());
      unital.lhs = sparse_json(tgt, u);
      unital.rhs = sparse_json(tgt, tgt.unit());
      unital.equal = u == tgt.unit();
      r.add(unital);

      Cell mult;
      mult.identity = "multiplicative";
      mult.inputs = mn_inputs(m, k);
      mult.lhs = "all basis pairs";
      mult.rhs = "all basis pairs";
      mult.equal = true;
      for (int x = 0; x < src.dim() && mult.equal; ++x)
        for (int y = 0; y < src.dim(); ++y) {
          SparseQ lhs = emb->apply(src.product(x, y));
          SparseQ rhs = tgt.multiply(emb->images[x], emb->images[y]);
          if (lhs != rhs) {
            mult.equal = false;
            mult.inputs["x"] = src.basis_labels()[x];
            mult.inputs["y"] = src.basis_labels()[y];
            mult.lhs = sparse_json(tgt, lhs);
            mult.rhs = sparse_json(tgt, rhs);
            break;
          }
        }
      r.add(mult);
    }

  // rho_{l+m,p} (rho_{l,m} (x) id) = rho_{l,m+p} (id (x) rho_{m,p})
  for (int total = 0; total <= n; ++total)
    for (int l = 0; l <= total; ++l)
      for (int m = 0; l + m <= total; ++m) {
        const int p = total - l - m;
        auto lm = t.embedding(l, m), lm_p = t.embedding(l + m, p);
        auto mp = t.embedding(m, p), l_mp = t.embedding(l, m + p);
        const int dl = t.algebra(l)->dim(), dm = t.algebra(m)->dim(), dp = t.algebra(p)->dim();
        const int dmp = t.algebra(m + p)->dim();
        Cell c;
        c.identity = "associative";
        c.inputs = Json{{"l", std::to_string(l)}, {"m", std::to_string(m)}, {"n", std::to_string(p)}};
        c.lhs = "all basis triples";
        c.rhs = "all basis triples";
        c.equal = true;
        for (int a = 0; a < dl && c.equal; ++a)
          for (int b = 0; b < dm && c.equal; ++b)
            for (int d = 0; d < dp; ++d) {
              SparseQ left = lm_p->apply(tensor_sparse(lm->images[a * dm + b], sparse_unit(d), dp));
              SparseQ right = l_mp->apply(tensor_sparse(sparse_unit(a), mp->images[b * dp + d], dmp));
              if (left != right) {
                const Algebra& tgt = *lm_p->target;
                c.equal = false;
                c.inputs["x"] = t.algebra(l)->basis_labels()[a];
                c.inputs["y"] = t.algebra(m)->basis_labels()[b];
                c.inputs["z"] = t.algebra(p)->basis_labels()[d];
                c.lhs = sparse_json(tgt, left);
                c.rhs = sparse_json(tgt, right);
                break;
              }
            }
        r.add(c);
      }
  return r;
}

Report check_condition3(const Tower& t, int n) {
  Report r;
  for (int total = 0; total <= n; ++total)
    for (int m = 0; m <= total; ++m) {
      const int k = total - m;
      auto emb = t.embedding(m, k);
      const Algebra& tgt = *emb->target;
      for (int side = 0; side < 2; ++side) {
        auto reps = side == 0 ? t.right_coset_reps(m, k) : t.left_coset_reps(m, k);
        Echelon ech(tgt.dim());
        for (const SparseQ& x : reps)
          for (const SparseQ& b : emb->images) ech.insert(side == 0 ? tgt.multiply(x, b) : tgt.multiply(b, x));
        const long long count = static_cast<long long>(reps.size()) * emb->source->dim();
        Json in = mn_inputs(m, k);
        in["representatives"] = std::to_string(reps.size());
        r.add(int_cell(side == 0 ? "right_free" : "left_free", in, ech.rank(), tgt.dim(),
                       ech.rank() == tgt.dim() && count == tgt.dim()));
      }
    }
  return r;
}

Report check_condition5_modules(const Tower& t, Group g, int n_max) {
  struct Task {
    Label x, y;
  };
  std::vector<Task> tasks;
  for (int total = 2; total <= n_max; ++total)
    for (int m = 1; m < total; ++m)
      for (const Label& x : t.labels(m))
        for (const Label& y : t.labels(total - m)) tasks.push_back({x, y});

  auto module_of = [&](const Label& l) { return g == Group::g0 ? t.simple_module(l) : t.projective_module(l); };
  auto decompose = [&](const Module& m) { return g == Group::g0 ? t.decompose_simple(m) : t.decompose_projective(m); };

  std::vector<std::vector<Cell>> results(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), [&](int i) {
    const Task& task = tasks[i];
    const int m = task.x.degree(), n = task.y.degree();
    Module mx = module_of(task.x), ny = module_of(task.y);
    Module ind = induce(t, mx, ny);
    for (int k = 1; k < m + n; ++k) {
      GVector lhs = decompose(restrict(t, ind, k));
      GVector rhs;
      for (int s = std::max(0, k - m); s <= std::min(k, n); ++s) {
        const int tt = k - s;
        rhs = add(rhs, decompose(twisted_induce(t, restrict(t, mx, tt), restrict(t, ny, s))));
      }
      Cell c;
      c.identity = "condition5";
      c.inputs = Json{{"x", task.x.str()}, {"y", task.y.str()}, {"k", std::to_string(k)}};
      c.lhs = gv_json(lhs);
      c.rhs = gv_json(rhs);
      c.equal = lhs == rhs;
      results[i].push_back(std::move(c));
    }
  });
  Report r;
  for (auto& cells : results)
    for (auto& c : cells) r.add(std::move(c));
  return r;
}

Report check_pairing_modules(const Tower& t, int n_max) {
  Report r;
  for (int d = 0; d <= n_max; ++d) {
    const auto labels = t.labels(d);
    for (const Label& p : labels)
      for (const Label& s : labels) {
        const int v = pairing_dim_hom(t.projective_module(p), t.simple_module(s));
        const int want = p == s ? 1 : 0;
        r.add(int_cell("pairing_matrix", Json{{"p", p.str()}, {"v", s.str()}}, v, want, v == want));
      }
  }
  // <P (x) Q, M (x) N> = <P, M><Q, N> with Hom over A_k (x) A_l.
  for (int total = 2; total <= n_max; ++total)
    for (int k = 1; k < total; ++k) {
      const int l = total - k;
      for (const Label& p : t.labels(k))
        for (const Label& q : t.labels(l))
          for (const Label& m : t.labels(k))
            for (const Label& n : t.labels(l)) {
              const int lhs = pairing_dim_hom(t.projective_tuple({p, q}), t.simple_tuple({m, n}));
              const int rhs = pairing_dim_hom(t.projective_module(p), t.simple_module(m)) *
                              pairing_dim_hom(t.projective_module(q), t.simple_module(n));
              r.add(int_cell("pairing_tensor", Json{{"p", p.str()}, {"q", q.str()}, {"m", m.str()}, {"n", n.str()}},
                             lhs, rhs, lhs == rhs));
            }
    }
  for (int d = 0; d <= n_max; ++d) {
    GVector got = t.decompose_projective(regular_module(t.algebra(d)));
    GVector want;
    for (const Label& l : t.labels(d)) add_term(want, {l}, t.simple_module(l).dim());
    Cell c;
    c.identity = "regular_module";
    c.inputs = Json{{"n", std::to_string(d)}};
    c.lhs = gv_json(got);
    c.rhs = gv_json(want);
    c.equal = got == want;
    r.add(c);
  }
  return r;
}

// ---------------------------------------------------------------- data

GradedHopfData module_hopf_data(const Tower& t, Group g, int n_max) {
  std::vector<std::vector<Label>> basis;
  for (int d = 0; d <= n_max; ++d) basis.push_back(t.labels(d));
  GradedHopfData h(t.name() + (g == Group::g0 ? ":g0" : ":k0"), n_max, basis);

  auto module_of = [&](const Label& l) { return g == Group::g0 ? t.simple_module(l) : t.projective_module(l); };
  auto decompose = [&](const Module& m) { return g == Group::g0 ? t.decompose_simple(m) : t.decompose_projective(m); };

  std::vector<std::pair<Label, Label>> pairs;
  std::vector<Label> singles;
  for (int a = 0; a <= n_max; ++a) {
    for (const Label& x : basis[a]) {
      singles.push_back(x);
      for (int b = 0; a + b <= n_max; ++b)
        for (const Label& y : basis[b]) pairs.emplace_back(x, y);
    }
  }
  std::vector<GVector> products(pairs.size()), coproducts(singles.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    products[i] = decompose(induce(t, module_of(pairs[i].first), module_of(pairs[i].second)));
  });
  parallel_for(static_cast<int>(singles.size()), [&](int i) {
    Module m = module_of(singles[i]);
    GVector acc;
    for (int k = 0; k <= singles[i].degree(); ++k) acc = add(acc, decompose(restrict(t, m, k)));
    coproducts[i] = std::move(acc);
  });
  for (size_t i = 0; i < pairs.size(); ++i) h.set_product(pairs[i].first, pairs[i].second, products[i]);
  for (size_t i = 0; i < singles.size(); ++i) h.set_coproduct(singles[i], coproducts[i]);
  return h;
}

PairingMatrix module_pairing(const Tower& t, int n_max) {
  PairingMatrix p;
  for (int d = 0; d <= n_max; ++d) {
    const auto labels = t.labels(d);
    std::vector<std::vector<Integer>> block(labels.size(), std::vector<Integer>(labels.size()));
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = 0; j < labels.size(); ++j)
        block[i][j] = pairing_dim_hom(t.projective_module(labels[i]), t.simple_module(labels[j]));
    p.blocks.push_back(std::move(block));
  }
  return p;
}

void parallel_for(int count, const std::function<void(int)>& f) {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOWER_MAX_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) threads = cap;
  }
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        {
          std::lock_guard lock(error_mu);
          if (error) return;
        }
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace towers
