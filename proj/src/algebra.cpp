#include "towers/algebra.hpp"

#include <map>

#include "towers/errors.hpp"

namespace towers {

namespace {

SparseQ accumulate(const std::map<int, Rational>& acc) { return sparse_from_map(acc); }

bool same_algebra(const Algebra& a, const Algebra& b) {
  return &a == &b || (a.degrees() == b.degrees() && a.dim() == b.dim() && a.generators().size() == b.generators().size());
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(std::vector<int> degrees, std::vector<std::string> basis_labels, SparseQ unit)
    : degrees_(std::move(degrees)),
      labels_(std::move(basis_labels)),
      unit_(std::move(unit)),
      table_(labels_.size() * labels_.size()),
      monomials_(labels_.size()) {}

SparseQ Algebra::multiply(const SparseQ& x, const SparseQ& y) const {
  std::map<int, Rational> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      Rational ab = a * b;
      for (const auto& [k, c] : product(i, j)) acc[k] += ab * c;
    }
  return accumulate(acc);
}

void Algebra::verify() const {
  const int d = dim();
  for (const auto& [i, c] : unit_)
    if (i < 0 || i >= d) throw ComputationError("algebra unit out of range");
  for (int i = 0; i < d; ++i) {
    if (multiply(unit_, sparse_unit(i)) != sparse_unit(i) || multiply(sparse_unit(i), unit_) != sparse_unit(i))
      throw ComputationError("unit law fails at basis element " + labels_[i]);
  }
  for (int i = 0; i < d; ++i) {
    SparseQ m = unit_;
    for (int g : monomials_[i]) m = multiply(m, generators_.at(g).element);
    if (m != sparse_unit(i)) throw ComputationError("monomial does not reproduce basis element " + labels_[i]);
  }
  for (const Generator& g : generators_) {
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        SparseQ lhs = multiply(product(x, y), g.element);
        SparseQ rhs = multiply(sparse_unit(x), multiply(sparse_unit(y), g.element));
        if (lhs != rhs)
          throw ComputationError("associativity fails at (" + labels_[x] + ", " + labels_[y] + ", " + g.label + ")");
      }
  }
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  const int da = a.dim(), db = b.dim();
  std::vector<int> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) labels.push_back(a.basis_labels()[i] + "|" + b.basis_labels()[j]);
  auto embed = [&](const SparseQ& x, const SparseQ& y) {
    SparseQ out;
    for (const auto& [i, p] : x)
      for (const auto& [j, q] : y) out.emplace_back(i * db + j, p * q);
    return out;
  };
  Algebra t(std::move(degrees), std::move(labels), embed(a.unit(), b.unit()));

  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) t.set_product(i * db + j, k * db + l, embed(a.product(i, k), b.product(j, l)));

  const int shift = static_cast<int>(a.generators().size());
  const int fshift = static_cast<int>(a.degrees().size());
  for (const Generator& g : a.generators())
    t.add_generator({g.label, g.factor, embed(g.element, b.unit())});
  for (const Generator& g : b.generators())
    t.add_generator({g.label, g.factor + fshift, embed(a.unit(), g.element)});
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      std::vector<int> w = a.monomial(i);
      for (int g : b.monomial(j)) w.push_back(g + shift);
      t.set_monomial(i * db + j, std::move(w));
    }
  return t;
}

SparseQ Embedding::apply(const SparseQ& x) const {
  std::map<int, Rational> acc;
  for (const auto& [i, a] : x)
    for (const auto& [k, c] : images.at(i)) acc[k] += a * c;
  return accumulate(acc);
}

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr algebra, int dim, std::vector<Matrix> generator_actions)
    : algebra_(std::move(algebra)), dim_(dim), gens_(std::move(generator_actions)) {
  if (gens_.size() != algebra_->generators().size()) throw std::invalid_argument("one action matrix per generator expected");
  for (const Matrix& g : gens_)
    if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("action matrix has the wrong shape");
}

Matrix Module::basis_action(int i) const {
  const auto& word = algebra_->monomial(i);
  if (word.empty()) return Matrix::identity(dim_);
  Matrix m = gens_.at(word[0]);
  for (size_t k = 1; k < word.size(); ++k) m = m * gens_.at(word[k]);
  return m;
}

Matrix Module::action(const SparseQ& x) const {
  Matrix out(dim_, dim_);
  for (const auto& [i, c] : x) out = out + basis_action(i).scaled(c);
  return out;
}

void Module::verify() const {
  const Algebra& a = *algebra_;
  const double cost = static_cast<double>(dim_) * dim_ * dim_ * a.dim() * std::max<size_t>(1, a.generators().size());
  const bool full = cost <= 2e7;
  for (size_t g = 0; g < a.generators().size(); ++g) {
    for (int b = 0; b < a.dim(); ++b) {
      if (!full && a.monomial(b).size() > 2) continue;
      Matrix lhs = gens_[g] * basis_action(b);
      Matrix rhs = action(a.multiply(a.generators()[g].element, sparse_unit(b)));
      if (!(lhs == rhs))
        throw ComputationError("module action is not multiplicative at (" + a.generators()[g].label + ", " +
                               a.basis_labels()[b] + ")");
    }
  }
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> gens;
  for (const Generator& g : a->generators()) {
    Matrix m(a->dim(), a->dim());
    for (int j = 0; j < a->dim(); ++j)
      for (const auto& [i, c] : a->multiply(g.element, sparse_unit(j))) m(i, j) = c;
    gens.push_back(std::move(m));
  }
  return Module(a, a->dim(), std::move(gens));
}

Module tensor_modules(const AlgebraPtr& algebra, const Module& m, const Module& n) {
  const size_t gm = m.generator_actions().size();
  const size_t gn = n.generator_actions().size();
  if (algebra->generators().size() != gm + gn) throw std::invalid_argument("tensor_modules: generator count mismatch");
  std::vector<Matrix> gens;
  Matrix im = Matrix::identity(m.dim()), in = Matrix::identity(n.dim());
  for (const Matrix& g : m.generator_actions()) gens.push_back(kron(g, in));
  for (const Matrix& g : n.generator_actions()) gens.push_back(kron(im, g));
  return Module(algebra, m.dim() * n.dim(), std::move(gens));
}

Module restrict_along(const Embedding& emb, const Module& m) {
  if (!same_algebra(*emb.target, *m.algebra())) throw std::invalid_argument("restrict: module is not over the target algebra");
  std::vector<Matrix> gens;
  for (const Generator& g : emb.source->generators()) gens.push_back(m.action(emb.apply(g.element)));
  return Module(emb.source, m.dim(), std::move(gens));
}

Module induce_along(const Embedding& emb, const Module& w, int expected_dim) {
  const Algebra& c = *emb.target;
  const Algebra& b = *emb.source;
  if (!same_algebra(b, *w.algebra())) throw std::invalid_argument("induce: module is not over the source algebra");
  const int dc = c.dim(), dw = w.dim();
  const int total = dc * dw;

  // a (x) v as a sparse vector of C (x) W.
  auto pure = [&](const SparseQ& a, const Vector& v) {
    SparseQ out;
    for (const auto& [i, p] : a)
      for (int j = 0; j < dw; ++j)
        if (sgn(v[j]) != 0) out.emplace_back(i * dw + j, p * v[j]);
    return out;
  };

  Echelon rel(total);
  std::vector<SparseQ> independent;
  for (size_t x = 0; x < b.generators().size(); ++x) {
    const SparseQ ex = emb.apply(b.generators()[x].element);
    const Matrix& xw = w.generator_actions()[x];
    for (int a = 0; a < dc; ++a) {
      const SparseQ aex = c.multiply(sparse_unit(a), ex);
      for (int j = 0; j < dw; ++j) {
        Vector ej(dw);
        ej[j] = 1;
        Vector col(dw);
        for (int i = 0; i < dw; ++i) col[i] = xw(i, j);
        SparseQ r = sparse_axpy(pure(aex, ej), -1, pure(sparse_unit(a), col));
        if (rel.insert(r)) independent.push_back(std::move(r));
      }
    }
  }

  const std::vector<int> free = rel.free_columns();
  const int dq = static_cast<int>(free.size());
  if (expected_dim >= 0 && dq != expected_dim)
    throw ComputationError("induced module has dimension " + std::to_string(dq) + ", expected " +
                           std::to_string(expected_dim));
  std::vector<int> pos(total, -1);
  for (int k = 0; k < dq; ++k) pos[free[k]] = k;

  // Left multiplication by a generator of C on C (x) W.
  auto act = [&](const SparseQ& g, const SparseQ& v) {
    std::map<int, Rational> acc;
    for (const auto& [idx, coef] : v) {
      const int a = idx / dw, j = idx % dw;
      for (const auto& [k, p] : c.multiply(g, sparse_unit(a))) acc[k * dw + j] += coef * p;
    }
    return sparse_from_map(acc);
  };

  std::vector<Matrix> gens;
  for (const Generator& g : c.generators()) {
    for (const SparseQ& r : independent) {
      if (!rel.contains(act(g.element, r)))
        throw ComputationError("generator " + g.label + " does not preserve the induction relations");
    }
    Matrix m(dq, dq);
    for (int k = 0; k < dq; ++k) {
      for (const auto& [col, val] : rel.reduce(act(g.element, sparse_unit(free[k])))) {
        if (pos[col] < 0) throw ComputationError("reduction left a pivot coordinate");
        m(pos[col], k) = val;
      }
    }
    gens.push_back(std::move(m));
  }
  return Module(emb.target, dq, std::move(gens));
}

// ---------------------------------------------------------------- Hom

namespace {

Echelon hom_equations(const Module& p, const Module& m) {
  if (!same_algebra(*p.algebra(), *m.algebra())) throw std::invalid_argument("Hom between modules over different algebras");
  const int dp = p.dim(), dm = m.dim();
  Echelon ech(dp * dm);
  for (size_t g = 0; g < p.generator_actions().size(); ++g) {
    const Matrix& pg = p.generator_actions()[g];
    const Matrix& mg = m.generator_actions()[g];
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dp; ++j) {
        std::map<int, Rational> row;
        for (int k = 0; k < dp; ++k)
          if (sgn(pg(k, j)) != 0) row[i * dp + k] += pg(k, j);
        for (int k = 0; k < dm; ++k)
          if (sgn(mg(i, k)) != 0) row[k * dp + j] -= mg(i, k);
        ech.insert(sparse_from_map(row));
      }
  }
  return ech;
}

}  // namespace

std::vector<Matrix> hom_space(const Module& p, const Module& m) {
  const int dp = p.dim(), dm = m.dim();
  std::vector<Matrix> out;
  for (const Vector& v : hom_equations(p, m).nullspace()) {
    Matrix f(dm, dp);
    for (int i = 0; i < dm; ++i)
      for (int k = 0; k < dp; ++k) f(i, k) = v[i * dp + k];
    out.push_back(std::move(f));
  }
  return out;
}

int pairing_dim_hom(const Module& p, const Module& m) {
  Echelon e = hom_equations(p, m);
  return e.ncols() - e.rank();
}

bool module_isomorphic(const Module& m, const Module& n) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  const auto basis = hom_space(m, n);
  if (basis.empty()) return false;
  const int h = static_cast<int>(basis.size());
  auto det_at = [&](const std::vector<Integer>& c) {
    Matrix f(n.dim(), m.dim());
    for (int i = 0; i < h; ++i)
      if (c[i] != 0) f = f + basis[i].scaled(Rational(c[i]));
    return determinant(f);
  };
  // A few deterministic points first: a generic combination is almost always
  // invertible when any is.
  for (int t = 1; t <= 3; ++t) {
    std::vector<Integer> c(h);
    for (int i = 0; i < h; ++i) {
      Integer v = 1;
      for (int e = 0; e < t; ++e) v *= (i + 2);
      c[i] = v;
    }
    if (det_at(c) != 0) return true;
  }
  // det(sum c_i f_i) has degree <= d in each variable, so it vanishes on the
  // whole grid {0..d}^h only when it is identically zero.
  const int d = m.dim();
  double points = 1;
  for (int i = 0; i < h; ++i) points *= d + 1;
  if (points > 200000) throw ComputationError("isomorphism search inconclusive: grid too large");
  std::vector<Integer> c(h, Integer(0));
  for (;;) {
    if (det_at(c) != 0) return true;
    int i = 0;
    while (i < h && c[i] == d) c[i++] = 0;
    if (i == h) break;
    c[i] += 1;
  }
  return false;
}

// ---------------------------------------------------------------- Coordinates

Coordinates::Coordinates(const std::vector<SparseQ>& basis, int ambient_dim)
    : ambient_(ambient_dim), k_(static_cast<int>(basis.size())), ech_(ambient_dim + k_) {
  Echelon plain(ambient_dim);
  for (int j = 0; j < k_; ++j) {
    if (!plain.insert(basis[j])) independent_ = false;
    SparseQ row = basis[j];
    row.emplace_back(ambient_ + j, Rational(1));
    ech_.insert(row);
  }
}

Vector Coordinates::coordinates(const SparseQ& x) const {
  if (!independent_) throw ComputationError("coordinates requested in a dependent family");
  SparseQ r = ech_.reduce(x);
  Vector c(k_);
  for (const auto& [col, val] : r) {
    if (col < ambient_) throw ComputationError("vector is outside the span");
    c[col - ambient_] = -val;
  }
  return c;
}

}  // namespace towers
