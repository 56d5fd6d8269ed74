#include "towers/z2.hpp"

#include "towers/errors.hpp"

namespace towers {

namespace {

// Letter at position p (0-based) of the word with flat index i.
int letter(int i, int n, int p) { return (i >> (n - 1 - p)) & 1; }

std::vector<int> word_of(int i, int n) {
  std::vector<int> w(n);
  for (int p = 0; p < n; ++p) w[p] = letter(i, n, p);
  return w;
}

}  // namespace

std::vector<Label> Z2Tower::labels(int n) const {
  std::vector<Label> out;
  for (int i = 0; i < (1 << n); ++i) out.push_back(Label::word(word_of(i, n)));
  return out;
}

Algebra Z2Tower::build_algebra(int n) const {
  const int d = 1 << n;
  std::vector<std::string> names;
  std::map<int, Rational> one;
  for (int i = 0; i < d; ++i) {
    names.push_back(Label::word(word_of(i, n)).str());
    one[i] = 1;
  }
  Algebra a({n}, names, sparse_from_map(one));
  for (int i = 0; i < d; ++i) a.set_product(i, i, sparse_unit(i));
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 2; ++c) {
      std::map<int, Rational> e;
      for (int i = 0; i < d; ++i)
        if (letter(i, n, p) == c) e[i] = 1;
      a.add_generator({std::string(c == 0 ? "eT" : "eS") + std::to_string(p + 1), 0, sparse_from_map(e)});
    }
  for (int i = 0; i < d; ++i) {
    std::vector<int> word;
    for (int p = 0; p < n; ++p) word.push_back(2 * p + letter(i, n, p));
    a.set_monomial(i, std::move(word));
  }
  return a;
}

std::vector<SparseQ> Z2Tower::build_embedding(int m, int n) const {
  std::vector<SparseQ> out;
  for (int i = 0; i < (1 << (m + n)); ++i) out.push_back(sparse_unit(i));
  return out;
}

Module Z2Tower::simple_module(const Label& l) const {
  const int n = l.degree();
  std::vector<Matrix> gens;
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 2; ++c) gens.push_back(Matrix::scalar(1, l.parts[p] == c ? Rational(1) : Rational(0)));
  return Module(algebra(n), 1, std::move(gens));
}

GVector Z2Tower::decompose_simple(const Module& m) const {
  const auto& degrees = m.algebra()->degrees();
  int total = 0;
  for (int d : degrees) total += d;
  if (m.algebra()->dim() != (1 << total)) throw ComputationError("unexpected algebra for the z2 tower");
  GVector out;
  Integer seen = 0;
  for (int i = 0; i < (1 << total); ++i) {
    const Rational tr = m.basis_action(i).trace();
    if (tr == 0) continue;
    if (tr < 0 || tr.get_den() != 1) throw ComputationError("idempotent trace is not a nonnegative integer");
    const auto w = word_of(i, total);
    LabelTuple t;
    size_t at = 0;
    for (int d : degrees) {
      t.push_back(Label::word(std::vector<int>(w.begin() + at, w.begin() + at + d)));
      at += d;
    }
    add_term(out, t, tr.get_num());
    seen += tr.get_num();
  }
  if (seen != m.dim()) throw ComputationError("idempotent traces do not add up to the dimension");
  return out;
}

std::vector<SparseQ> Z2Tower::right_coset_reps(int m, int n) const { return {algebra(m + n)->unit()}; }

}  // namespace towers
