#include "towers/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace towers {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  if (s == "()" || s.empty()) return out;
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer list: " + std::string(text));
      out.push_back(ch - '0');
    }
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list: " + std::string(text));
    }
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, bool compact) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i && !compact) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_ints(text)); }

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("permutation product: size mismatch");
  std::vector<int> w(size());
  for (int i = 0; i < size(); ++i) w[i] = w_[rhs.w_[i] - 1];
  Permutation p;
  p.w_ = std::move(w);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> w(size());
  for (int i = 0; i < size(); ++i) w[w_[i] - 1] = i + 1;
  Permutation p;
  p.w_ = std::move(w);
  return p;
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++l;
  return l;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (w_[i - 1] > w_[i]) d.push_back(i);
  return d;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) out.emplace_back(i + 1, j + 1);
  return out;
}

Permutation Permutation::left_simple(int i) const {
  Permutation p = *this;
  for (int& v : p.w_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return p;
}

Permutation Permutation::right_simple(int i) const {
  Permutation p = *this;
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

bool Permutation::left_ascent(int i) const {
  for (int v : w_) {
    if (v == i) return true;
    if (v == i + 1) return false;
  }
  throw std::invalid_argument("left_ascent: index out of range");
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> rev;
  Permutation p = *this;
  for (;;) {
    auto d = p.descents();
    if (d.empty()) break;
    rev.push_back(d.front());
    p = p.right_simple(d.front());
  }
  return {rev.rbegin(), rev.rend()};
}

std::string Permutation::str() const { return join_ints(w_, size() <= 9); }

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> w = a.window();
  for (int v : b.window()) w.push_back(v + a.size());
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool weak_order_leq(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("weak order: size mismatch");
  const auto& a = s.window();
  const auto& b = t.window();
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (a[i] > a[j] && b[i] < b[j]) return false;
  return true;
}

std::vector<Permutation> min_coset_reps(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("min_coset_reps: negative degree");
  // Choose which values occupy the first m positions; both blocks increasing.
  std::vector<Permutation> out;
  std::vector<char> mask(m + n, 0);
  std::fill(mask.begin(), mask.begin() + m, 1);
  do {
    std::vector<int> first, second;
    for (int v = 1; v <= m + n; ++v) (mask[v - 1] ? first : second).push_back(v);
    first.insert(first.end(), second.begin(), second.end());
    out.emplace_back(std::move(first));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::from_descents(int n, const std::vector<int>& descents) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n) throw std::invalid_argument("descent set out of range");
    parts.push_back(d - prev);
    prev = d;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) { return Composition(parse_ints(text)); }

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::descent_set() const {
  std::vector<int> d;
  int s = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) d.push_back(s += parts_[i]);
  return d;
}

Composition Composition::mirror() const { return Composition({parts_.rbegin(), parts_.rend()}); }

Composition Composition::conjugate() const {
  // D(conj I) = {n - i : i not in D(I)}.
  const int n = weight();
  auto d = descent_set();
  std::set<int> ds(d.begin(), d.end());
  std::vector<int> out;
  for (int i = n - 1; i >= 1; --i)
    if (!ds.count(i)) out.push_back(n - i);
  return from_descents(n, out);
}

std::string Composition::str() const { return "(" + join_ints(parts_, false) + ")"; }

std::strong_ordering Composition::operator<=>(const Composition& rhs) const {
  if (auto c = weight() <=> rhs.weight(); c != 0) return c;
  auto a = descent_set();
  auto b = rhs.descent_set();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition()};
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) d.push_back(i);
    out.push_back(Composition::from_descents(n, d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition descent_composition(const Permutation& s) {
  return Composition::from_descents(s.size(), s.descents());
}

namespace {

struct Ribbon {
  // Box (row, column) in reading order: rows top to bottom, each left to right.
  std::vector<std::pair<int, int>> boxes;
};

Ribbon ribbon(const Composition& c) {
  Ribbon r;
  int col = 0;
  for (int row = 0; row < c.length(); ++row) {
    for (int k = 0; k < c.parts()[row]; ++k) r.boxes.emplace_back(row, col + k);
    col += c.parts()[row] - 1;
  }
  return r;
}

// Numbers the boxes 1..n in the order given by `less` on (row, column).
template <class Less>
Permutation fill(const Composition& c, Less less) {
  Ribbon r = ribbon(c);
  std::vector<int> order(r.boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return less(r.boxes[a], r.boxes[b]); });
  std::vector<int> w(r.boxes.size());
  for (size_t k = 0; k < order.size(); ++k) w[order[k]] = static_cast<int>(k) + 1;
  return Permutation(std::move(w));
}

}  // namespace

Permutation alpha(const Composition& c) {
  // Columns left to right, each from bottom to top.
  return fill(c, [](auto a, auto b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first > b.first;
  });
}

Permutation omega(const Composition& c) {
  // Rows bottom to top, each from left to right.
  return fill(c, [](auto a, auto b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
}

std::vector<Permutation> descent_class(const Composition& c) {
  std::vector<Permutation> out;
  auto d = c.descent_set();
  for (auto& p : all_permutations(c.weight()))
    if (p.descents() == d) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(lo.size()))
    if (weak_order_leq(lo, p) && weak_order_leq(p, hi)) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must not increase");
  }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_ints(text)); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
    int h = 0;
    for (int p : parts_)
      if (p >= j) ++h;
    out.push_back(h);
  }
  return Partition(std::move(out));
}

Partition Partition::join(const Partition& rhs) const {
  std::vector<int> v = parts_;
  v.insert(v.end(), rhs.parts_.begin(), rhs.parts_.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::int64_t Partition::z() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  std::int64_t z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return z;
}

int Partition::sign() const {
  int odd = 0;
  for (int p : parts_) odd += (p - 1) % 2;
  return odd % 2 ? -1 : 1;
}

std::string Partition::str() const { return "(" + join_ints(parts_, false) + ")"; }

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------- words

std::string word_str(const Word& w) { return join_ints(w, std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; })); }

std::vector<Word> shuffle(const Word& u, const Word& v) {
  std::set<int> letters(u.begin(), u.end());
  if (letters.size() != u.size()) throw std::invalid_argument("shuffle: repeated letter");
  for (int x : v)
    if (!letters.insert(x).second) throw std::invalid_argument("shuffle: alphabets overlap");

  // Shuffles of the suffixes u[i..], v[j..], memoized on (i, j).
  std::map<std::pair<size_t, size_t>, std::vector<Word>> memo;
  auto rec = [&](auto&& self, size_t i, size_t j) -> const std::vector<Word>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (i == u.size() || j == v.size()) {
      Word w(u.begin() + i, u.end());
      w.insert(w.end(), v.begin() + j, v.end());
      out.push_back(std::move(w));
    } else {
      for (const Word& t : self(self, i + 1, j)) {
        Word w{u[i]};
        w.insert(w.end(), t.begin(), t.end());
        out.push_back(std::move(w));
      }
      for (const Word& t : self(self, i, j + 1)) {
        Word w{v[j]};
        w.insert(w.end(), t.begin(), t.end());
        out.push_back(std::move(w));
      }
    }
    return memo[key] = std::move(out);
  };
  std::vector<Word> out = rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> shuffle_split(const Word& u, const Word& v, int k) {
  const int m = static_cast<int>(u.size());
  const int n = static_cast<int>(v.size());
  if (k < 0 || k > m + n) throw std::invalid_argument("shuffle_split: k out of range");
  std::vector<Word> out;
  for (int i = std::max(0, k - n); i <= std::min(k, m); ++i) {
    const int j = k - i;
    auto head = shuffle(Word(u.begin(), u.begin() + i), Word(v.begin(), v.begin() + j));
    auto tail = shuffle(Word(u.begin() + i, u.end()), Word(v.begin() + j, v.end()));
    for (const Word& a : head)
      for (const Word& b : tail) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        out.push_back(std::move(w));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace towers
