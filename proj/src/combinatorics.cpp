// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blobcell {

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::less: return "less";
    case Cmp::equal: return "equal";
    case Cmp::greater: return "greater";
    case Cmp::incomparable: return "incomparable";
  }
  return "?";
}

int shape_size(const Shape& s) {
  int n = 0;
  for (const auto& comp : s)
    for (int r : comp) n += r;
  return n;
}

bool is_multipartition(const Shape& s) {
  for (const auto& comp : s)
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i] < 0) return false;
      if (i && comp[i] > comp[i - 1]) return false;
    }
  return true;
}

bool is_one_column(const Shape& s) {
  for (const auto& comp : s)
    for (int r : comp)
      if (r != 1) return false;
  return true;
}

Shape one_column(const std::vector<int>& heights) {
  Shape s;
  for (int h : heights) s.emplace_back(static_cast<std::size_t>(h), 1);
  return s;
}

std::vector<int> column_heights(const Shape& s) {
  std::vector<int> h;
  for (const auto& comp : s) {
    int c = 0;
    for (int r : comp)
      if (r > 0) ++c;
    h.push_back(c);
  }
  return h;
}

std::vector<Node> diagram(const Shape& s) {
  std::vector<Node> out;
  for (std::size_t m = 0; m < s.size(); ++m)
    for (std::size_t r = 0; r < s[m].size(); ++r)
      for (int c = 1; c <= s[m][r]; ++c) out.push_back({static_cast<int>(r) + 1, c, static_cast<int>(m) + 1});
  return out;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (m) os << ",";
    if (is_one_column({s[m]})) {
      if (s[m].empty())
        os << "0";
      else
        os << "1^" << s[m].size();
    } else {
      os << "(";
      for (std::size_t r = 0; r < s[m].size(); ++r) os << (r ? "," : "") << s[m][r];
      os << ")";
    }
  }
  os << ")";
  return os.str();
}

Weighting theta_zero(int l) { return Weighting(static_cast<std::size_t>(l), 0); }

Weighting theta_separated(int l, int n) {
  Weighting t(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) t[i] = (l - 1 - i) * (n + 1);
  return t;
}

int node_key(const Node& g, const Weighting& theta) { return theta.at(g.comp - 1) + g.col - g.row; }

Cmp node_cmp(const Node& a, const Node& b, const Weighting& theta) {
  if (a == b) return Cmp::equal;
  const int ka = node_key(a, theta), kb = node_key(b, theta);
  if (ka != kb) return ka < kb ? Cmp::less : Cmp::greater;
  if (a.comp != b.comp) return a.comp > b.comp ? Cmp::less : Cmp::greater;
  return Cmp::incomparable;
}

namespace {

// Node counts indexed by (key, comp) over a fixed key window.  The number
// of nodes strictly above g0 depends on g0 only through (key, comp), so the
// dominance test is a finite scan over the window.
class KeyCounts {
 public:
  KeyCounts(int lo, int hi, const Weighting& theta)
      : lo_(lo), span_(hi - lo + 1), l_(static_cast<int>(theta.size())), theta_(theta),
        c_(static_cast<std::size_t>(span_) * l_, 0) {}
  void add(const Node& g) { ++c_[static_cast<std::size_t>(node_key(g, theta_) - lo_) * l_ + g.comp - 1]; }
  // For every g0: #{g in a above g0} <= #{g in b above g0}.
  static bool leq(const KeyCounts& a, const KeyCounts& b) {
    int above_a = 0, above_b = 0;
    for (int k = a.span_ - 1; k >= 0; --k) {
      int row_a = 0, row_b = 0;
      for (int m = 0; m < a.l_; ++m) {
        if (above_a + row_a > above_b + row_b) return false;
        row_a += a.c_[static_cast<std::size_t>(k) * a.l_ + m];
        row_b += b.c_[static_cast<std::size_t>(k) * a.l_ + m];
      }
      above_a += row_a;
      above_b += row_b;
    }
    return true;
  }

 private:
  int lo_, span_, l_;
  const Weighting& theta_;
  std::vector<int> c_;
};

std::pair<int, int> key_window(const std::vector<Node>& a, const std::vector<Node>& b, const Weighting& theta) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto* v : {&a, &b})
    for (const auto& g : *v) {
      const int k = node_key(g, theta);
      if (first) lo = hi = k, first = false;
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  return {lo, hi};
}

bool dominance_nodes(const std::vector<Node>& a, const std::vector<Node>& b, const Weighting& theta) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance: size mismatch");
  if (a.empty()) return true;
  const auto [lo, hi] = key_window(a, b, theta);
  KeyCounts ca(lo, hi, theta), cb(lo, hi, theta);
  for (const auto& g : a) ca.add(g);
  for (const auto& g : b) cb.add(g);
  return KeyCounts::leq(ca, cb);
}

std::vector<std::vector<int>> partitions_of(int n, int maxpart) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (int first = std::min(n, maxpart); first >= 1; --first)
    for (auto rest : partitions_of(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Compositions of n into l nonnegative parts, lexicographically decreasing.
void compositions(int n, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == l - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = n; a >= 0; --a) {
    cur.push_back(a);
    compositions(n - a, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool dominance_leq(const Shape& lhs, const Shape& rhs, const Weighting& theta) {
  if (shape_size(lhs) != shape_size(rhs)) throw std::invalid_argument("dominance: size mismatch");
  return dominance_nodes(diagram(lhs), diagram(rhs), theta);
}

Cmp dominance_cmp(const Shape& lhs, const Shape& rhs, const Weighting& theta) {
  const bool le = dominance_leq(lhs, rhs, theta), ge = dominance_leq(rhs, lhs, theta);
  if (le && ge) return Cmp::equal;
  if (le) return Cmp::less;
  if (ge) return Cmp::greater;
  return Cmp::incomparable;
}

bool raising_bijection_exists(const Shape& lhs, const Shape& rhs, const Weighting& theta) {
  const auto a = diagram(lhs), b = diagram(rhs);
  if (a.size() != b.size()) throw std::invalid_argument("bijection: size mismatch");
  std::vector<int> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      const Cmp c = node_cmp(b[perm[i]], a[i], theta);
      ok = c == Cmp::greater || c == Cmp::equal;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Shape mu_max(int n, int l) {
  if (n < 0 || l < 1) throw std::invalid_argument("mu_max: need n >= 0 and l >= 1");
  std::vector<int> h(static_cast<std::size_t>(l), n / l);
  for (int i = 0; i < n % l; ++i) ++h[i];
  return one_column(h);
}

std::vector<Shape> multipartitions(int n, int l) {
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  compositions(n, l, cur, sizes);
  std::vector<Shape> out;
  for (const auto& sz : sizes) {
    std::vector<Shape> partial{{}};
    for (int m = 0; m < l; ++m) {
      std::vector<Shape> next;
      for (const auto& pre : partial)
        for (const auto& part : partitions_of(sz[m], sz[m])) {
          Shape s = pre;
          s.push_back(part);
          next.push_back(std::move(s));
        }
      partial = std::move(next);
    }
    for (auto& s : partial) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Shape> one_column_multipartitions(int n, int l) {
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  compositions(n, l, cur, sizes);
  std::vector<Shape> out;
  for (const auto& h : sizes) out.push_back(one_column(h));
  return out;
}

// ------------------------------------------------------------- tableaux

Tableau::Tableau(Shape shape, std::vector<Node> at) : shape_(std::move(shape)), at_(std::move(at)) {
  auto d = diagram(shape_);
  auto sorted = at_;
  std::sort(d.begin(), d.end());
  std::sort(sorted.begin(), sorted.end());
  if (d != sorted) throw std::invalid_argument("tableau is not a bijection onto its shape");
}

Tableau Tableau::from_rows(const Shape& shape, const std::vector<std::vector<int>>& entries) {
  const int n = shape_size(shape);
  if (entries.size() != shape.size()) throw std::invalid_argument("tableau: component count mismatch");
  std::vector<Node> at(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t m = 0; m < shape.size(); ++m) {
    std::size_t pos = 0;
    for (std::size_t r = 0; r < shape[m].size(); ++r)
      for (int c = 1; c <= shape[m][r]; ++c) {
        if (pos >= entries[m].size()) throw std::invalid_argument("tableau: too few entries");
        const int k = entries[m][pos++];
        if (k < 1 || k > n || seen[k - 1]) throw std::invalid_argument("tableau: entries must be a permutation of 1..n");
        seen[k - 1] = true;
        at[k - 1] = {static_cast<int>(r) + 1, c, static_cast<int>(m) + 1};
      }
    if (pos != entries[m].size()) throw std::invalid_argument("tableau: too many entries");
  }
  return Tableau(shape, std::move(at));
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns) {
  std::vector<int> h;
  for (const auto& c : columns) h.push_back(static_cast<int>(c.size()));
  return from_rows(one_column(h), columns);
}

int Tableau::entry(const Node& g) const {
  for (std::size_t k = 0; k < at_.size(); ++k)
    if (at_[k] == g) return static_cast<int>(k) + 1;
  return 0;
}

bool Tableau::is_standard() const {
  for (std::size_t k = 0; k < at_.size(); ++k) {
    const Node& g = at_[k];
    const int here = static_cast<int>(k) + 1;
    if (g.col > 1 && entry({g.row, g.col - 1, g.comp}) > here) return false;
    if (g.row > 1 && entry({g.row - 1, g.col, g.comp}) > here) return false;
  }
  return true;
}

Shape Tableau::restricted_shape(int k) const {
  Shape s(shape_.size());
  for (std::size_t m = 0; m < shape_.size(); ++m) s[m].assign(shape_[m].size(), 0);
  for (int j = 0; j < k; ++j) ++s[at_[j].comp - 1][at_[j].row - 1];
  for (auto& comp : s)
    while (!comp.empty() && comp.back() == 0) comp.pop_back();
  return s;
}

Tableau Tableau::act(const Perm& w) const {
  if (w.size() != at_.size()) throw std::invalid_argument("tableau action: size mismatch");
  std::vector<Node> at(at_.size());
  for (std::size_t j = 0; j < at_.size(); ++j) at[j] = at_[w[j]];
  Tableau t;
  t.shape_ = shape_;
  t.at_ = std::move(at);
  return t;
}

Tableau Tableau::swapped(int k) const {
  Tableau t(*this);
  std::swap(t.at_[k - 1], t.at_[k]);
  return t;
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(shape_.size());
  for (std::size_t m = 0; m < shape_.size(); ++m)
    for (std::size_t r = 0; r < shape_[m].size(); ++r)
      for (int c = 1; c <= shape_[m][r]; ++c) out[m].push_back(entry({static_cast<int>(r) + 1, c, static_cast<int>(m) + 1}));
  return out;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << "(";
  const auto rs = rows();
  for (std::size_t m = 0; m < rs.size(); ++m) {
    if (m) os << "|";
    for (std::size_t i = 0; i < rs[m].size(); ++i) os << (i ? "," : "") << rs[m][i];
  }
  os << ")";
  return os.str();
}

Tableau t_lambda(const Shape& shape, const Weighting& theta) {
  const int n = shape_size(shape);
  Shape cur(shape.size());
  std::vector<Node> at;
  for (int i = 0; i < n; ++i) {
    std::optional<Node> best;
    for (std::size_t m = 0; m < shape.size(); ++m) {
      // Addable nodes of cur[m] that lie inside shape[m].
      for (std::size_t r = 0; r <= cur[m].size(); ++r) {
        const int len = r < cur[m].size() ? cur[m][r] : 0;
        if (r >= shape[m].size() || len >= shape[m][r]) continue;
        if (r > 0 && cur[m][r - 1] <= len) continue;
        const Node g{static_cast<int>(r) + 1, len + 1, static_cast<int>(m) + 1};
        if (!best || node_cmp(g, *best, theta) == Cmp::greater) best = g;
      }
    }
    if (!best) throw std::logic_error("t_lambda: no addable node");
    auto& comp = cur[best->comp - 1];
    if (static_cast<int>(comp.size()) < best->row) comp.push_back(0);
    ++comp[best->row - 1];
    at.push_back(*best);
  }
  return Tableau(shape, std::move(at));
}

bool tableau_leq(const Tableau& t, const Tableau& s, const Weighting& theta) {
  const int k = std::min(t.size(), s.size());
  if (k == 0) return true;
  // shape(t|j) is a multicomposition: entry j adds a node at the end of its
  // row, so both sides are built incrementally.
  const auto [lo, hi] = key_window(diagram(t.shape()), diagram(s.shape()), theta);
  KeyCounts ct(lo, hi, theta), cs(lo, hi, theta);
  auto row_fill = [](const Shape& sh) {
    std::vector<std::vector<int>> f(sh.size());
    for (std::size_t m = 0; m < sh.size(); ++m) f[m].assign(sh[m].size(), 0);
    return f;
  };
  auto ft = row_fill(t.shape()), fs = row_fill(s.shape());
  for (int j = 1; j <= k; ++j) {
    const Node& a = t.node(j);
    const Node& b = s.node(j);
    ct.add({a.row, ++ft[a.comp - 1][a.row - 1], a.comp});
    cs.add({b.row, ++fs[b.comp - 1][b.row - 1], b.comp});
    if (!KeyCounts::leq(ct, cs)) return false;
  }
  return true;
}

Cmp tableau_cmp(const Tableau& t, const Tableau& s, const Weighting& theta) {
  const bool le = tableau_leq(t, s, theta), ge = tableau_leq(s, t, theta);
  if (le && ge) return Cmp::equal;
  if (le) return Cmp::less;
  if (ge) return Cmp::greater;
  return Cmp::incomparable;
}

Cmp lex_cmp(const Tableau& t, const Tableau& s, const Weighting& theta) {
  const int k = std::min(t.size(), s.size());
  for (int j = 1; j <= k; ++j) {
    const Shape a = t.restricted_shape(j), b = s.restricted_shape(j);
    if (diagram(a) == diagram(b)) continue;
    return dominance_cmp(a, b, theta);
  }
  return Cmp::equal;
}

Cmp shape_lex_cmp(const Shape& a, const Shape& b, const Weighting& theta) {
  const int m = shape_size(a), n = shape_size(b);
  const Cmp c = lex_cmp(t_lambda(a, theta), t_lambda(b, theta), theta);
  if (m == n) return c;
  // The smaller shape is below whenever it agrees with the restriction of
  // the larger one or lies lexicographically below it.
  if (m < n) return c == Cmp::greater ? Cmp::greater : Cmp::less;
  return c == Cmp::less ? Cmp::less : Cmp::greater;
}

std::vector<Tableau> all_tableaux(const Shape& shape) {
  const auto d = diagram(shape);
  std::vector<int> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Tableau> out;
  do {
    std::vector<Node> at;
    at.reserve(d.size());
    for (int i : idx) at.push_back(d[i]);
    out.emplace_back(shape, std::move(at));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Tableau> std_tableaux(const Shape& shape) {
  // Remove the node holding n among the removable nodes, recursively.
  std::function<void(Shape&, std::vector<Node>&, int, std::vector<std::vector<Node>>&)> rec =
      [&](Shape& cur, std::vector<Node>& at, int k, std::vector<std::vector<Node>>& out) {
        if (k == 0) {
          out.push_back(at);
          return;
        }
        for (std::size_t m = 0; m < cur.size(); ++m)
          for (std::size_t r = 0; r < cur[m].size(); ++r) {
            const int len = cur[m][r];
            if (len == 0) continue;
            if (r + 1 < cur[m].size() && cur[m][r + 1] >= len) continue;
            at[k - 1] = {static_cast<int>(r) + 1, len, static_cast<int>(m) + 1};
            --cur[m][r];
            rec(cur, at, k - 1, out);
            ++cur[m][r];
          }
      };
  if (!is_multipartition(shape)) throw std::invalid_argument("std_tableaux: shape is not a multipartition");
  Shape cur = shape;
  std::vector<Node> at(static_cast<std::size_t>(shape_size(shape)));
  std::vector<std::vector<Node>> raw;
  rec(cur, at, shape_size(shape), raw);
  std::vector<Tableau> out;
  for (auto& a : raw) out.emplace_back(shape, std::move(a));
  std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) { return x.rows() < y.rows(); });
  return out;
}

WeakOrder::WeakOrder(const Shape& shape, const Weighting& theta) : tabs_(all_tableaux(shape)) {
  const int N = static_cast<int>(tabs_.size());
  for (int i = 0; i < N; ++i) idx_[tabs_[i].nodes()] = i;
  std::vector<std::vector<int>> up(N);
  const int n = shape_size(shape);
  for (int i = 0; i < N; ++i)
    for (int k = 1; k < n; ++k) {
      const Tableau s = tabs_[i].swapped(k);
      if (tableau_cmp(s, tabs_[i], theta) == Cmp::greater) up[i].push_back(idx_.at(s.nodes()));
    }
  reach_.assign(N, std::vector<bool>(N, false));
  for (int i = 0; i < N; ++i) {
    std::vector<int> stack{i};
    reach_[i][i] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : up[v])
        if (!reach_[i][w]) {
          reach_[i][w] = true;
          stack.push_back(w);
        }
    }
  }
}

int WeakOrder::index(const Tableau& t) const { return idx_.at(t.nodes()); }

bool WeakOrder::leq(const Tableau& t, const Tableau& s) const { return reach_[index(t)][index(s)]; }

// --------------------------------------------------------- permutations

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) c[j] = a[b[j]];
  return c;
}

Perm perm_inverse(const Perm& w) {
  Perm v(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) v[w[j]] = static_cast<int>(j);
  return v;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm p = perm_identity(n);
  for (int a : word) {
    if (a < 1 || a >= n) throw std::invalid_argument("perm_from_word: letter out of range");
    // p := p s_a, i.e. swap positions a-1 and a.
    std::swap(p[a - 1], p[a]);
  }
  return p;
}

namespace {

// Left multiplication by s_a swaps the values a-1 and a (0-based).
Perm left_mult(int a, Perm w) {
  for (auto& x : w)
    if (x == a - 1)
      x = a;
    else if (x == a)
      x = a - 1;
  return w;
}

bool is_left_descent(const Perm& w, int a) {
  const auto inv = perm_inverse(w);
  return inv[a] < inv[a - 1];
}

}  // namespace

std::vector<int> lexmin_reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  const int n = static_cast<int>(w.size());
  while (perm_length(cur) > 0) {
    for (int a = 1; a < n; ++a)
      if (is_left_descent(cur, a)) {
        word.push_back(a);
        cur = left_mult(a, cur);
        break;
      }
  }
  return word;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool bruhat_leq_subword(const Perm& u, const Perm& w) {
  // Walk the lexmin reduced word of w letter by letter.  With s = s_a a left
  // descent of w: u <= w iff su <= sw when s is a left descent of u, and
  // u <= sw otherwise.
  Perm cu = u, cw = w;
  for (int a : lexmin_reduced_word(w)) {
    if (is_left_descent(cu, a)) cu = left_mult(a, cu);
    cw = left_mult(a, cw);
  }
  return perm_length(cu) == 0;
}

bool bruhat_leq_rank(const Perm& u, const Perm& w) {
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int cu = 0, cw = 0;
      for (int k = 0; k <= i; ++k) {
        if (u[k] >= j) ++cu;
        if (w[k] >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  return true;
}

Perm d_perm(const Tableau& t, const Weighting& theta) {
  const Tableau tl = t_lambda(t.shape(), theta);
  std::map<Node, int> pos;
  for (int j = 1; j <= tl.size(); ++j) pos[tl.node(j)] = j - 1;
  Perm d(static_cast<std::size_t>(t.size()));
  for (int j = 1; j <= t.size(); ++j) d[j - 1] = pos.at(t.node(j));
  return d;
}

// ------------------------------------------------------------ residues

namespace {
int mod(long long a, int e) {
  long long r = a % e;
  return static_cast<int>(r < 0 ? r + e : r);
}
}  // namespace

std::vector<int> Multicharge::kappa() const {
  std::vector<int> k;
  for (long long h : hat_kappa) k.push_back(mod(h, e));
  return k;
}

int residue(const Node& g, const Multicharge& mc) {
  return mod(mc.hat_kappa.at(g.comp - 1) + g.col - g.row, mc.e);
}

Residues residue_seq(const Tableau& t, const Multicharge& mc) {
  Residues r;
  for (const auto& g : t.nodes()) r.push_back(residue(g, mc));
  return r;
}

Residues act_residues(const Residues& i, int k) {
  Residues j = i;
  std::swap(j[k - 1], j[k]);
  return j;
}

std::string residues_str(const Residues& i) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < i.size(); ++k) os << (k ? "," : "") << i[k];
  os << ")";
  return os.str();
}

bool is_strongly_adjacency_free(const Multicharge& mc, int n, std::string* why) {
  std::ostringstream os;
  const int l = static_cast<int>(mc.hat_kappa.size());
  const int e = mc.e;
  const auto k = mc.kappa();
  bool ok = true;
  auto fail = [&](const char* cond, const std::string& msg) {
    if (!ok) os << "; ";
    os << "condition " << cond << ": " << msg;
    ok = false;
  };
  if (e < 2) fail("e", "e must be at least 2");
  for (int i = 0; i + 1 < l; ++i)
    if (mc.hat_kappa[i + 1] - mc.hat_kappa[i] < n) {
      fail("i", "hat_kappa_" + std::to_string(i + 2) + " - hat_kappa_" + std::to_string(i + 1) + " = " +
                    std::to_string(mc.hat_kappa[i + 1] - mc.hat_kappa[i]) + " < n = " + std::to_string(n));
      break;
    }
  for (int i = 0, done = 0; i < l && !done; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      const int d = mod(k[i] - k[j], e);
      if (d == 0 || d == 1 || d == e - 1) {
        fail("ii", "kappa_" + std::to_string(i + 1) + " - kappa_" + std::to_string(j + 1) + " is 0 or +-1 mod e");
        done = 1;
        break;
      }
    }
  if (l > 0 && e >= 2 && mod(k[0] - k[l - 1] - 2, e) == 0) fail("iii", "kappa_1 = kappa_l + 2 mod e");
  for (int i = 0; i + 1 < l; ++i)
    if (!(k[i] < k[i + 1])) {
      fail("iv", "kappa is not strictly increasing");
      break;
    }
  if (why) *why = os.str();
  return ok;
}

bool free_move_equivalent(const Residues& i, const Residues& j, int e) {
  if (i.size() != j.size()) return false;
  auto sorted_i = i, sorted_j = j;
  std::sort(sorted_i.begin(), sorted_i.end());
  std::sort(sorted_j.begin(), sorted_j.end());
  if (sorted_i != sorted_j) return false;
  for (int a = 0; a < e; ++a)
    for (int b = a; b < e; ++b) {
      const int d = mod(b - a, e);
      if (d != 0 && d != 1 && d != e - 1) continue;
      std::vector<int> pi, pj;
      for (int x : i)
        if (x == a || x == b) pi.push_back(x);
      for (int x : j)
        if (x == a || x == b) pj.push_back(x);
      if (pi != pj) return false;
    }
  return true;
}

// ------------------------------------------------------------- Garnir

bool is_garnir(const Tableau& t, const Weighting& theta) {
  if (t.is_standard()) return false;
  std::vector<int> raising;
  int standard_swap = 0;
  for (int i = 1; i < t.size(); ++i) {
    const Tableau s = t.swapped(i);
    if (tableau_cmp(s, t, theta) == Cmp::greater) raising.push_back(i);
    if (s.is_standard()) standard_swap = i;
  }
  if (!standard_swap) return false;
  for (int i : raising)
    if (i != standard_swap) return false;
  return true;
}

std::vector<Node> garnir_snake(const Shape& shape, const Node& gamma, const Weighting& theta) {
  if (gamma.row < 2) throw std::invalid_argument("Garnir node must not lie in the first row");
  const Node plus{gamma.row - 1, gamma.col, gamma.comp};
  const auto d = diagram(shape);
  if (std::find(d.begin(), d.end(), gamma) == d.end()) throw std::invalid_argument("Garnir node outside the shape");
  std::vector<Node> out;
  for (const auto& g : d) {
    const Cmp lo = node_cmp(gamma, g, theta), hi = node_cmp(g, plus, theta);
    if ((lo == Cmp::less || lo == Cmp::equal) && (hi == Cmp::less || hi == Cmp::equal)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [&](const Node& a, const Node& b) { return node_cmp(a, b, theta) == Cmp::greater; });
  return out;
}

std::vector<int> garnir_snake_numbers(const Shape& shape, const Node& gamma, const Weighting& theta) {
  const auto snake = garnir_snake(shape, gamma, theta);
  const Tableau tl = t_lambda(shape, theta);
  std::vector<int> out;
  for (int i = 1; i <= tl.size(); ++i)
    if (std::find(snake.begin(), snake.end(), tl.node(i)) != snake.end()) out.push_back(i);
  return out;
}

std::optional<Node> garnir_node(const Tableau& t, const Weighting& theta) {
  const int n = t.size();
  const Tableau tl = t_lambda(t.shape(), theta);
  for (int i0 = 1; i0 < n; ++i0) {
    const Node g = t.node(i0), up = t.node(i0 + 1);
    if (g.row < 2 || up != Node{g.row - 1, g.col, g.comp}) continue;
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (i != i0) ok = node_cmp(t.node(i), t.node(i + 1), theta) == Cmp::greater;
    if (!ok) continue;
    const auto nums = garnir_snake_numbers(t.shape(), g, theta);
    for (int i = 1; i <= n && ok; ++i)
      if (!std::binary_search(nums.begin(), nums.end(), i)) ok = t.node(i) == tl.node(i);
    if (ok) return g;
  }
  return std::nullopt;
}

namespace {

Tableau fill_snake(const Shape& shape, const Node& gamma, const std::vector<Node>& order) {
  const Weighting t0 = theta_zero(static_cast<int>(shape.size()));
  const Tableau tl = t_lambda(shape, t0);
  const auto nums = garnir_snake_numbers(shape, gamma, t0);
  if (nums.size() != order.size()) throw std::logic_error("Garnir snake size mismatch");
  std::vector<Node> at = tl.nodes();
  for (std::size_t j = 0; j < nums.size(); ++j) at[nums[j] - 1] = order[j];
  return Tableau(shape, std::move(at));
}

void check_garnir_node(const Shape& shape, const Node& gamma) {
  if (!is_one_column(shape)) throw std::invalid_argument("Garnir constructions need a one-column shape");
  if (gamma.row < 2) throw std::invalid_argument("Garnir node must not lie in the first row");
  const auto d = diagram(shape);
  if (std::find(d.begin(), d.end(), gamma) == d.end()) throw std::invalid_argument("Garnir node outside the shape");
}

// Row r of the zero-weighting snake: nodes (r,1,m') with m' in the range.
std::vector<Node> row_nodes(const Shape& shape, int row, int from_comp, int to_comp) {
  std::vector<Node> out;
  for (int m = from_comp; m <= to_comp; ++m)
    if (m >= 1 && m <= static_cast<int>(shape.size()) && static_cast<int>(shape[m - 1].size()) >= row)
      out.push_back({row, 1, m});
  return out;
}

}  // namespace

Tableau classical_garnir(const Shape& shape, const Node& gamma) {
  check_garnir_node(shape, gamma);
  const int l = static_cast<int>(shape.size());
  const Node plus{gamma.row - 1, 1, gamma.comp};
  std::vector<Node> order = row_nodes(shape, gamma.row, 1, gamma.comp - 1);
  order.push_back(gamma);
  order.push_back(plus);
  for (const auto& g : row_nodes(shape, plus.row, gamma.comp + 1, l)) order.push_back(g);
  return fill_snake(shape, gamma, order);
}

Tableau tilde_garnir(const Shape& shape, const Node& gamma) {
  check_garnir_node(shape, gamma);
  const int l = static_cast<int>(shape.size());
  const Node plus{gamma.row - 1, 1, gamma.comp};
  std::vector<Node> order{gamma, plus};
  for (const auto& g : row_nodes(shape, plus.row, gamma.comp + 1, l)) order.push_back(g);
  for (const auto& g : row_nodes(shape, gamma.row, 1, gamma.comp - 1)) order.push_back(g);
  return fill_snake(shape, gamma, order);
}

std::vector<GarnirDatum> garnir_enumerate(const Shape& shape, const Weighting& theta) {
  if (!is_one_column(shape)) throw std::invalid_argument("garnir_enumerate needs a one-column shape");
  const Tableau tl = t_lambda(shape, theta);
  std::vector<GarnirDatum> out;
  for (int k = 1; k <= tl.size(); ++k) {
    const Node gamma = tl.node(k);
    if (gamma.row < 2) continue;
    const auto snake = garnir_snake(shape, gamma, theta);
    const auto nums = garnir_snake_numbers(shape, gamma, theta);
    std::vector<int> perm(snake.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Tableau> found;
    do {
      std::vector<Node> at = tl.nodes();
      for (std::size_t j = 0; j < nums.size(); ++j) at[nums[j] - 1] = snake[perm[j]];
      Tableau g(shape, std::move(at));
      const auto node = garnir_node(g, theta);
      if (node && *node == gamma) found.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(found.begin(), found.end());
    for (auto& g : found) out.push_back({shape, gamma, std::move(g), snake, nums});
  }
  return out;
}

}  // namespace blobcell
