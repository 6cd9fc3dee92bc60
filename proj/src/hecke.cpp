// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/hecke.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace blobcell {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

Fp unit_inverse(const Fp& x) { return x.inv(); }
RatFun unit_inverse(const RatFun& x) { return x.inv(); }
Series unit_inverse(const Series& x) { return x.inv(); }
LaurentPoly unit_inverse(const LaurentPoly& x) {
  if (x.body().degree() != 0) throw std::domain_error("Laurent polynomial is not a unit");
  const std::uint32_t p = x.modulus();
  return LaurentPoly(Poly::constant(p, inv_mod(x.body().coeff(0), p)), -x.shift());
}

// Multiply by t^k, dropping what falls off the end.
Series shift_up(const Series& s, int k) {
  Series r(s.modulus(), s.precision());
  for (int i = 0; i + k < s.precision(); ++i) r.coeff_ref(i + k) = s.coeff(i);
  return r;
}

std::vector<Node> addable_nodes(const Shape& cur) {
  std::vector<Node> out;
  for (int m = 0; m < static_cast<int>(cur.size()); ++m) {
    const auto& rows = cur[m];
    for (int r = 0; r <= static_cast<int>(rows.size()); ++r) {
      const int len = r < static_cast<int>(rows.size()) ? rows[r] : 0;
      if (r == 0 || rows[r - 1] > len) out.push_back({r + 1, len + 1, m + 1});
    }
  }
  return out;
}

void add_node(Shape& cur, const Node& g) {
  auto& rows = cur[g.comp - 1];
  if (g.row > static_cast<int>(rows.size())) rows.push_back(0);
  ++rows[g.row - 1];
}

void remove_node(Shape& cur, const Node& g) {
  auto& rows = cur[g.comp - 1];
  if (--rows[g.row - 1] == 0) rows.pop_back();
}

// Walks every standard tableau of size n, calling step(k, node, others) when
// node is placed at position k next to the other addable nodes, and
// leaf(shape, nodes) at depth n.  step returns a token whose restore() runs
// on the way back up.
template <class Step, class Leaf>
void walk_tableaux(int n, int l, Step&& step, Leaf&& leaf) {
  Shape cur(l);
  std::vector<Node> at;
  auto rec = [&](auto&& self) -> void {
    const int k = static_cast<int>(at.size());
    if (k == n) {
      leaf(cur, at);
      return;
    }
    const auto add = addable_nodes(cur);
    for (std::size_t a = 0; a < add.size(); ++a) {
      std::vector<Node> others;
      for (std::size_t b = 0; b < add.size(); ++b)
        if (b != a) others.push_back(add[b]);
      auto token = step(k + 1, add[a], others);
      add_node(cur, add[a]);
      at.push_back(add[a]);
      self(self);
      at.pop_back();
      remove_node(cur, add[a]);
      token.restore();
    }
  };
  rec(rec);
}

}  // namespace

// ------------------------------------------------------------- params

HeckeParams HeckeParams::make(int n, int l, int e, std::uint32_t p, std::vector<long long> hat_kappa,
                              std::uint32_t q) {
  if (n < 1 || l < 1) throw InvalidParameters("n and l must be positive");
  if (static_cast<int>(hat_kappa.size()) != l) throw InvalidParameters("hat_kappa must have l entries");
  if (!is_prime(p)) throw InvalidParameters("p = " + std::to_string(p) + " is not prime");
  if (e <= 2 * l) throw InvalidParameters("need e > 2l");
  HeckeParams hp;
  hp.n = n;
  hp.l = l;
  hp.p = p;
  hp.mc = Multicharge{std::move(hat_kappa), e};
  if (q == 0) {
    hp.q = root_of_unity(p, static_cast<std::uint32_t>(e));
  } else {
    if (order_mod(q % p, p) != static_cast<std::uint32_t>(e))
      throw InvalidParameters("q is not a primitive e-th root of unity mod p");
    hp.q = q % p;
  }
  std::string why;
  if (!is_strongly_adjacency_free(hp.mc, n, &why))
    throw InvalidParameters("multicharge is not strongly adjacency-free: " + why);
  return hp;
}

HeckeParams HeckeParams::preset(int n, int l) {
  const int e = 2 * l + 1;
  std::uint32_t p = static_cast<std::uint32_t>(e) + 1;
  while (!is_prime(p)) p += static_cast<std::uint32_t>(e);
  std::vector<long long> hk{0};
  for (int m = 1; m < l; ++m) {
    long long x = hk.back() + n;
    while (mod(x, e) != mod(2 * m, e)) ++x;
    hk.push_back(x);
  }
  return make(n, l, e, p, hk);
}

HeckeParams HeckeParams::with_n(int m) const {
  HeckeParams r = *this;
  r.n = m;
  return r;
}

// -------------------------------------------------------------- basis

AKBasis::AKBasis(int n, int l) : n_(n), l_(l) {
  perms_ = all_perms(n);
  nperm_ = static_cast<int>(perms_.size());
  nexp_ = 1;
  for (int i = 0; i < n; ++i) nexp_ *= l;
  left_.assign(n > 0 ? n - 1 : 0, std::vector<int>(nperm_));
  right_ = left_;
  word_.resize(nperm_);
  len_.resize(nperm_);
  inv_.resize(nperm_);
  for (int w = 0; w < nperm_; ++w) {
    const Perm& p = perms_[w];
    len_[w] = perm_length(p);
    word_[w] = lexmin_reduced_word(p);
    inv_[w] = perm_index(perm_inverse(p));
    for (int r = 1; r < n; ++r) {
      Perm a = p;
      for (auto& x : a)
        if (x == r - 1) x = r;
        else if (x == r) x = r - 1;
      left_[r - 1][w] = perm_index(a);
      Perm b = p;
      std::swap(b[r - 1], b[r]);
      right_[r - 1][w] = perm_index(b);
    }
  }
}

int AKBasis::perm_index(const Perm& w) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), w);
  if (it == perms_.end() || *it != w) throw std::invalid_argument("not a permutation of the right size");
  return static_cast<int>(it - perms_.begin());
}

std::vector<int> AKBasis::exps(int cidx) const {
  std::vector<int> c(n_);
  for (int i = 0; i < n_; ++i) {
    c[i] = cidx % l_;
    cidx /= l_;
  }
  return c;
}

int AKBasis::exps_index(const std::vector<int>& c) const {
  int idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * l_ + c[i];
  return idx;
}

std::string AKBasis::label(int idx) const {
  std::ostringstream os;
  const auto c = exps(cidx(idx));
  bool any = false;
  for (int i = 0; i < n_; ++i)
    if (c[i]) {
      os << (any ? " " : "") << "L" << i + 1;
      if (c[i] > 1) os << "^" << c[i];
      any = true;
    }
  const auto& w = word(widx(idx));
  if (!w.empty()) {
    os << (any ? " " : "") << "T";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "(") << w[i];
    os << ")";
    any = true;
  }
  return any ? os.str() : "1";
}

// ------------------------------------------------------------ algebra

template <class Ring>
AKAlgebra<Ring>::AKAlgebra(int n, int l, Ring ring, Elem q, std::vector<Elem> roots)
    : basis_(n, l), ring_(std::move(ring)), q_(std::move(q)), roots_(std::move(roots)) {
  if (static_cast<int>(roots_.size()) != l) throw std::invalid_argument("need l cyclotomic roots");
  qinv_ = unit_inverse(q_);
  const int N = dim();
  const Elem one = ring_.one(), qm1 = q_ - ring_.one();
  const int id = basis_.perm_index(perm_identity(n));

  auto column = [&](std::map<int, Elem>& acc) {
    Column col;
    for (auto& [t, c] : acc)
      if (!c.is_zero()) col.emplace_back(t, std::move(c));
    return col;
  };
  auto add = [&](std::map<int, Elem>& acc, int t, const Elem& c) {
    auto it = acc.find(t);
    if (it == acc.end()) acc.emplace(t, c);
    else it->second += c;
  };

  // Left T_r by the Bernstein relation.
  lT_.assign(n - 1, Op(N));
  for (int r = 1; r < n; ++r)
    for (int idx = 0; idx < N; ++idx) {
      const auto c = basis_.exps(basis_.cidx(idx));
      const int w = basis_.widx(idx);
      std::map<int, Elem> acc;
      auto sc = c;
      std::swap(sc[r - 1], sc[r]);
      const int ci = basis_.exps_index(sc), sw = basis_.left_s(r, w);
      if (basis_.length(sw) > basis_.length(w)) {
        add(acc, basis_.index(ci, sw), one);
      } else {
        add(acc, basis_.index(ci, w), qm1);
        add(acc, basis_.index(ci, sw), q_);
      }
      const int a = c[r - 1], b = c[r];
      if (a != b) {
        const int lo = std::min(a, b), span = std::abs(a - b) - 1;
        const Elem coef = a > b ? -qm1 : qm1;
        for (int i = 0; i <= span; ++i) {
          auto cc = c;
          cc[r - 1] = lo + i;
          cc[r] = lo + (span - i) + 1;
          add(acc, basis_.index(basis_.exps_index(cc), w), coef);
        }
      }
      lT_[r - 1][idx] = column(acc);
    }

  // Right T_r only touches the finite Hecke part.
  rT_.assign(n - 1, Op(N));
  for (int r = 1; r < n; ++r)
    for (int idx = 0; idx < N; ++idx) {
      const int ci = basis_.cidx(idx), w = basis_.widx(idx), ws = basis_.right_s(r, w);
      if (basis_.length(ws) > basis_.length(w)) {
        rT_[r - 1][idx] = {{basis_.index(ci, ws), one}};
      } else {
        rT_[r - 1][idx] = {{basis_.index(ci, w), qm1}, {basis_.index(ci, ws), q_}};
      }
    }

  // L_1^l from the cyclotomic polynomial, then L_k^l recursively:
  // L_k^l = q^-1 [T_{k-1} L_{k-1}^l + (q-1) sum_{j=1}^{l-1} L_{k-1}^j L_k^{l-j}] T_{k-1}.
  std::vector<Elem> poly{one};
  for (const auto& Q : roots_) {
    std::vector<Elem> next(poly.size() + 1, ring_.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= Q * poly[i];
    }
    poly = std::move(next);
  }
  R_.assign(n, zero());
  for (int j = 0; j < l; ++j) {
    std::vector<int> c(n, 0);
    c[0] = j;
    R_[0][basis_.index(basis_.exps_index(c), id)] = -poly[j];
  }
  for (int k = 2; k <= n; ++k) {
    Vec v = left_T(k - 1, R_[k - 2]);
    for (int j = 1; j < l; ++j) {
      std::vector<int> c(n, 0);
      c[k - 2] = j;
      c[k - 1] = l - j;
      v[basis_.index(basis_.exps_index(c), id)] += qm1;
    }
    v = right_T(k - 1, v);
    for (auto& x : v) x *= qinv_;
    R_[k - 1] = std::move(v);
  }

  lL_.assign(n, Op(N));
  for (int k = 1; k <= n; ++k)
    for (int idx = 0; idx < N; ++idx) {
      auto c = basis_.exps(basis_.cidx(idx));
      const int w = basis_.widx(idx);
      ++c[k - 1];
      if (c[k - 1] < l) {
        lL_[k - 1][idx] = {{basis_.index(basis_.exps_index(c), w), one}};
        continue;
      }
      const Vec v = right_perm(reduce(c, 0), w);
      Column col;
      for (int t = 0; t < N; ++t)
        if (!v[t].is_zero()) col.emplace_back(t, v[t]);
      lL_[k - 1][idx] = std::move(col);
    }

  // (L^c T_w)* = T_{w^-1} L^c.
  star_.assign(N, Column{});
  for (int idx = 0; idx < N; ++idx) {
    Vec v = basis_vector(basis_.index(basis_.cidx(idx), id));
    const auto& wd = basis_.word(basis_.inverse(basis_.widx(idx)));
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = left_T(*it, v);
    Column col;
    for (int t = 0; t < N; ++t)
      if (!v[t].is_zero()) col.emplace_back(t, v[t]);
    star_[idx] = std::move(col);
  }
  memo_.clear();
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::basis_vector(int idx) const {
  Vec v = zero();
  v[idx] = ring_.one();
  return v;
}

template <class Ring>
void AKAlgebra<Ring>::axpy(Vec& out, const Elem& s, const Vec& v) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] += s * v[i];
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::apply(const Op& op, const Vec& v) const {
  Vec out = zero();
  for (std::size_t src = 0; src < v.size(); ++src) {
    if (v[src].is_zero()) continue;
    for (const auto& [t, c] : op[src]) out[t] += c * v[src];
  }
  return out;
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::right_perm(Vec v, int widx) const {
  for (int a : basis_.word(widx)) v = right_T(a, v);
  return v;
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::reduce(const std::vector<int>& b, int depth) const {
  if (depth > 100000) throw RewriteNonTermination("normal-form reduction did not terminate");
  if (auto it = memo_.find(b); it != memo_.end()) return it->second;
  const int l = basis_.l();
  int i = basis_.n() - 1;
  while (i >= 0 && b[i] < l) --i;
  const int id = basis_.perm_index(perm_identity(basis_.n()));
  if (i < 0) return basis_vector(basis_.index(basis_.exps_index(b), id));
  auto base = b;
  base[i] -= l;
  Vec out = zero();
  const Vec& R = R_[i];
  for (int idx = 0; idx < dim(); ++idx) {
    if (R[idx].is_zero()) continue;
    const auto c = basis_.exps(basis_.cidx(idx));
    auto bb = base;
    for (int j = 0; j < basis_.n(); ++j) bb[j] += c[j];
    axpy(out, R[idx], right_perm(reduce(bb, depth + 1), basis_.widx(idx)));
  }
  memo_.emplace(b, out);
  return out;
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::monomial(const std::vector<int>& b) const {
  return reduce(b, 0);
}

template <class Ring>
typename AKAlgebra<Ring>::Vec AKAlgebra<Ring>::mul(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (int idx = 0; idx < dim(); ++idx) {
    if (a[idx].is_zero()) continue;
    Vec t = b;
    const auto& wd = basis_.word(basis_.widx(idx));
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) t = left_T(*it, t);
    const auto c = basis_.exps(basis_.cidx(idx));
    for (int k = 1; k <= n(); ++k)
      for (int m = 0; m < c[k - 1]; ++m) t = left_L(k, t);
    axpy(out, a[idx], t);
  }
  return out;
}

AKAlgebra<FpRing> specialized_algebra(const HeckeParams& hp) {
  const FpRing ring{hp.p};
  const Fp q(hp.q, hp.p);
  std::vector<Fp> roots;
  for (auto k : hp.mc.hat_kappa) roots.push_back(q.pow(k));
  return AKAlgebra<FpRing>(hp.n, hp.l, ring, q, roots);
}

AKAlgebra<LaurentRing> generic_algebra(const HeckeParams& hp) {
  std::vector<LaurentPoly> roots;
  for (auto k : hp.mc.hat_kappa) roots.push_back(LaurentPoly::monomial(hp.p, 1, static_cast<int>(k)));
  return AKAlgebra<LaurentRing>(hp.n, hp.l, LaurentRing{hp.p}, LaurentPoly::monomial(hp.p, 1, 1), roots);
}

AKAlgebra<RatRing> rational_algebra(const HeckeParams& hp) {
  std::vector<RatFun> roots;
  for (auto k : hp.mc.hat_kappa) roots.push_back(RatFun::monomial(hp.p, 1, static_cast<int>(k)));
  return AKAlgebra<RatRing>(hp.n, hp.l, RatRing{hp.p}, RatFun::monomial(hp.p, 1, 1), roots);
}

AKAlgebra<SeriesRing> series_algebra(const HeckeParams& hp, int prec) {
  const Fp q(hp.q, hp.p);
  auto ex = [&](long long k) { return expand_at(LaurentPoly::monomial(hp.p, 1, static_cast<int>(k)), q, prec); };
  std::vector<Series> roots;
  for (auto k : hp.mc.hat_kappa) roots.push_back(ex(k));
  return AKAlgebra<SeriesRing>(hp.n, hp.l, SeriesRing{hp.p, prec}, ex(1), roots);
}

FpMat to_fpmat(const AKAlgebra<FpRing>::Op& op, int dim, std::uint32_t p) {
  FpMat m(dim, dim, p);
  for (int src = 0; src < dim; ++src)
    for (const auto& [t, c] : op[src]) m(t, src) = c.v;
  return m;
}

template <class Ring>
std::vector<std::string> check_hecke_relations(const AKAlgebra<Ring>& A) {
  std::vector<std::string> bad;
  const int n = A.n(), N = A.dim();
  const auto& R = A.ring();
  const auto q = A.q(), qm1 = A.q() - R.one();
  auto fail = [&](const std::string& what, int idx) {
    bad.push_back(what + " fails on " + A.basis().label(idx));
  };
  auto sub = [](auto a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto scale = [](auto a, const auto& s) {
    for (auto& x : a) x *= s;
    return a;
  };
  auto is_zero = [](const auto& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  const auto qinv = unit_inverse(q);
  // Cyclotomic roots are recovered as the eigenvalues of L_1 on L_1^0.
  for (int idx = 0; idx < N; ++idx) {
    const auto v = A.basis_vector(idx);
    for (int r = 1; r < n; ++r) {
      const auto t = A.left_T(r, v);
      if (!is_zero(sub(sub(A.left_T(r, t), scale(t, qm1)), scale(v, q)))) fail("quadratic T" + std::to_string(r), idx);
      if (r + 1 < n) {
        const auto a = A.left_T(r, A.left_T(r + 1, t));
        const auto b = A.left_T(r + 1, A.left_T(r, A.left_T(r + 1, v)));
        if (a != b) fail("braid " + std::to_string(r), idx);
      }
      for (int s = r + 2; s < n; ++s)
        if (A.left_T(r, A.left_T(s, v)) != A.left_T(s, t)) fail("T commute", idx);
      // T_r L_r = L_{r+1} (T_r - q + 1)
      if (A.left_T(r, A.left_L(r, v)) != A.left_L(r + 1, sub(t, scale(v, qm1)))) fail("T_r L_r", idx);
      // L_{r+1} = q^-1 T_r L_r T_r
      if (A.left_L(r + 1, v) != scale(A.left_T(r, A.left_L(r, t)), qinv)) fail("L_{r+1}", idx);
      for (int s = 1; s <= n; ++s)
        if (s != r && s != r + 1 && A.left_T(r, A.left_L(s, v)) != A.left_L(s, t)) fail("T_r L_s", idx);
      if (A.right_T(r, v) != A.mul(v, A.left_T(r, A.unit()))) fail("right T", idx);
    }
    for (int r = 1; r <= n; ++r)
      for (int s = r + 1; s <= n; ++s)
        if (A.left_L(r, A.left_L(s, v)) != A.left_L(s, A.left_L(r, v))) fail("L commute", idx);
    if (A.star(A.star(v)) != v) fail("star involution", idx);
  }
  return bad;
}

// --------------------------------------------------------- seminormal

long long content_exponent(const Node& g, const HeckeParams& hp) {
  return hp.mc.hat_kappa[g.comp - 1] + g.col - g.row;
}

RatFun generic_content(const Tableau& t, int k, const HeckeParams& hp) {
  return RatFun::monomial(hp.p, 1, static_cast<int>(content_exponent(t.node(k), hp)));
}

SeminormalModel::SeminormalModel(const HeckeParams& hp) : hp_(hp) {
  const int n = hp.n;
  const auto theta = theta_separated(hp.l, n);
  const RatFun zero = RatFun(hp.p), one = RatFun::constant(hp.p, 1);
  const RatFun q = RatFun::monomial(hp.p, 1, 1);
  std::set<std::vector<long long>> seen;
  for (const auto& shape : multipartitions(n, hp.l)) {
    SeminormalBlock b;
    b.shape = shape;
    b.tabs = std_tableaux(shape);
    const int m = static_cast<int>(b.tabs.size());
    std::map<std::vector<Node>, int> pos;
    for (int i = 0; i < m; ++i) {
      pos[b.tabs[i].nodes()] = i;
      std::vector<long long> cv;
      for (int k = 1; k <= n; ++k) cv.push_back(content_exponent(b.tabs[i].node(k), hp));
      if (!seen.insert(cv).second)
        throw DegenerateContents("two standard tableaux share a content sequence: " + b.tabs[i].str());
    }
    b.contents.assign(n, std::vector<RatFun>(m, zero));
    for (int k = 1; k <= n; ++k)
      for (int i = 0; i < m; ++i) b.contents[k - 1][i] = generic_content(b.tabs[i], k, hp);
    for (int r = 1; r < n; ++r) {
      Matrix<RatFun> M(m, m, zero);
      for (int s = 0; s < m; ++s) {
        const Tableau& S = b.tabs[s];
        const Tableau T = S.swapped(r);
        const Node &a = S.node(r), &c = S.node(r + 1);
        if (!T.is_standard()) {
          if (a.comp == c.comp && a.row == c.row) M(s, s) = q;
          else M(s, s) = -one;
          continue;
        }
        const int t = pos.at(T.nodes());
        const RatFun cS = b.contents[r - 1][s], cT = b.contents[r - 1][t];
        if (cS == cT) throw DegenerateContents("equal contents at a swap in " + S.str());
        // Column s of the left matrix is the image of f_S under the right action.
        M(s, s) = (q - one) * cT / (cT - cS);
        if (tableau_cmp(S, T, theta) == Cmp::greater) {
          M(t, s) = one;
        } else {
          const RatFun d = cT - cS;
          M(t, s) = (q * cS - cT) * (cS - q * cT) / (d * d);
        }
      }
      b.T.push_back(std::move(M));
    }
    blocks_.push_back(std::move(b));
  }
}

Matrix<RatFun> SeminormalModel::identity(int b) const {
  const int m = static_cast<int>(blocks_[b].tabs.size());
  return Matrix<RatFun>::identity(m, RatFun(hp_.p), RatFun::constant(hp_.p, 1));
}

Matrix<RatFun> SeminormalModel::L(int b, int k) const {
  Matrix<RatFun> M(static_cast<int>(blocks_[b].tabs.size()), static_cast<int>(blocks_[b].tabs.size()), RatFun(hp_.p));
  for (int i = 0; i < M.rows(); ++i) M(i, i) = blocks_[b].contents[k - 1][i];
  return M;
}

Matrix<RatFun> SeminormalModel::word(int b, const std::vector<int>& w) const {
  Matrix<RatFun> M = identity(b);
  for (int g : w) M = M * (g > 0 ? blocks_[b].T[g - 1] : L(b, -g));
  return M;
}

std::pair<int, int> SeminormalModel::locate(const Tableau& t) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t i = 0; i < blocks_[b].tabs.size(); ++i)
      if (blocks_[b].tabs[i] == t) return {static_cast<int>(b), static_cast<int>(i)};
  throw std::invalid_argument("tableau is not a standard tableau of this model");
}

std::vector<Matrix<RatFun>> SeminormalModel::murphy_idempotent(const Tableau& s) const {
  const auto [sb, si] = locate(s);
  std::vector<Matrix<RatFun>> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    Matrix<RatFun> M = identity(static_cast<int>(b));
    for (int k = 1; k <= hp_.n; ++k) {
      const RatFun cs = blocks_[sb].contents[k - 1][si];
      const Matrix<RatFun> Lk = L(static_cast<int>(b), k);
      for (const auto& ob : blocks_)
        for (std::size_t t = 0; t < ob.tabs.size(); ++t) {
          const RatFun ct = ob.contents[k - 1][t];
          if (ct == cs) continue;
          const RatFun d = (cs - ct).inv();
          // Lk is diagonal, so right multiplication scales columns.
          for (int j = 0; j < M.cols(); ++j) {
            const RatFun f = (Lk(j, j) - ct) * d;
            for (int i = 0; i < M.rows(); ++i)
              if (!M(i, j).is_zero()) M(i, j) *= f;
          }
        }
    }
    out.push_back(std::move(M));
  }
  return out;
}

std::vector<std::string> SeminormalModel::check_relations() const {
  std::vector<std::string> bad;
  const int n = hp_.n;
  const RatFun q = RatFun::monomial(hp_.p, 1, 1), one = RatFun::constant(hp_.p, 1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    const auto& B = blocks_[b];
    const auto I = identity(b);
    const std::string where = " in block " + shape_str(B.shape);
    for (int r = 1; r < n; ++r) {
      const auto& T = B.T[r - 1];
      if (!(T * T - T.scaled(q - one) - I.scaled(q)).is_zero()) bad.push_back("quadratic T" + std::to_string(r) + where);
      if (r + 1 < n && T * B.T[r] * T != B.T[r] * T * B.T[r]) bad.push_back("braid " + std::to_string(r) + where);
      for (int s = r + 2; s < n; ++s)
        if (T * B.T[s - 1] != B.T[s - 1] * T) bad.push_back("T commute" + where);
      if (T * L(b, r) != L(b, r + 1) * (T - I.scaled(q - one))) bad.push_back("T_r L_r" + where);
      if (L(b, r + 1).scaled(q) != T * L(b, r) * T) bad.push_back("L_{r+1}" + where);
      for (int s = 1; s <= n; ++s)
        if (s != r && s != r + 1 && T * L(b, s) != L(b, s) * T) bad.push_back("T_r L_s" + where);
    }
    Matrix<RatFun> cyc = I;
    for (auto k : hp_.mc.hat_kappa) cyc = cyc * (L(b, 1) - I.scaled(RatFun::monomial(hp_.p, 1, static_cast<int>(k))));
    if (!cyc.is_zero()) bad.push_back("cyclotomic" + where);
  }
  return bad;
}

LaurentPoly regular_trace(const AKAlgebra<LaurentRing>& A, const std::vector<int>& w) {
  LaurentPoly tr(A.ring().p);
  for (int idx = 0; idx < A.dim(); ++idx) {
    auto v = A.basis_vector(idx);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = *it > 0 ? A.left_T(*it, v) : A.left_L(-*it, v);
    tr += v[idx];
  }
  return tr;
}

RatFun seminormal_regular_trace(const SeminormalModel& m, const std::vector<int>& w) {
  RatFun tr(m.params().p);
  for (int b = 0; b < static_cast<int>(m.blocks().size()); ++b) {
    const auto M = m.word(b, w);
    RatFun t(m.params().p);
    for (int i = 0; i < M.rows(); ++i) t += M(i, i);
    tr += t * RatFun::constant(m.params().p, static_cast<long long>(M.rows()));
  }
  return tr;
}

std::vector<EigenMultiplicity> jm_eigen_multiplicities(const HeckeParams& hp, int k) {
  const SeminormalModel model(hp);
  std::map<long long, int> predicted;
  for (const auto& b : model.blocks()) {
    const int m = static_cast<int>(b.tabs.size());
    for (const auto& t : b.tabs) predicted[content_exponent(t.node(k), hp)] += m;
  }
  const auto A = rational_algebra(hp);
  const int N = A.dim();
  const RatFun zero(hp.p);
  Matrix<RatFun> L(N, N, zero);
  for (int src = 0; src < N; ++src)
    for (const auto& [t, c] : A.left_L_op(k)[src]) L(t, src) = c;
  std::vector<EigenMultiplicity> out;
  for (const auto& [ex, count] : predicted) {
    Matrix<RatFun> M = L;
    const RatFun c = RatFun::monomial(hp.p, 1, static_cast<int>(ex));
    for (int i = 0; i < N; ++i) M(i, i) -= c;
    out.push_back({ex, count, N - rank(M)});
  }
  return out;
}

// ------------------------------------------------- class idempotents

std::vector<Tableau> all_std_tableaux(int n, int l) {
  std::vector<Tableau> out;
  for (const auto& s : multipartitions(n, l))
    for (auto& t : std_tableaux(s)) out.push_back(std::move(t));
  return out;
}

namespace {

Residues residues_of(const std::vector<Node>& at, const HeckeParams& hp) {
  Residues r;
  for (const auto& g : at) r.push_back(mod(content_exponent(g, hp), hp.e()));
  return r;
}

// t-adic valuation of q_hat^a - q_hat^b at q_hat = q + t.
int diff_valuation(long long a, long long b, const HeckeParams& hp) {
  if (a == b) throw DegenerateContents("two addable nodes share a content");
  const auto s = expand_at(LaurentPoly::monomial(hp.p, 1, static_cast<int>(a)) -
                               LaurentPoly::monomial(hp.p, 1, static_cast<int>(b)),
                           Fp(hp.q, hp.p), 64);
  const int v = s.valuation();
  if (v >= 64) throw std::runtime_error("content difference vanishes to high order");
  return v;
}

Tableau tableau_of(const Shape& cur, const std::vector<Node>& at) {
  Shape s;
  for (const auto& rows : cur) s.push_back(rows);
  return Tableau(s, at);
}

}  // namespace

std::vector<ClassIdempotent> class_idempotents(const HeckeParams& hp, bool allow_poles) {
  const int n = hp.n;
  // Pass 1: the largest valuation of any denominator fixes the precision.
  int vmax = 0;
  {
    std::vector<int> vs{0};
    struct Tok {
      std::vector<int>* vs;
      void restore() { vs->pop_back(); }
    };
    walk_tableaux(
        n, hp.l,
        [&](int, const Node& g, const std::vector<Node>& others) {
          int v = vs.back();
          for (const auto& o : others) v += diff_valuation(content_exponent(g, hp), content_exponent(o, hp), hp);
          vs.push_back(v);
          return Tok{&vs};
        },
        [&](const Shape&, const std::vector<Node>&) { vmax = std::max(vmax, vs.back()); });
  }
  const int P = vmax + 1;
  const auto A = series_algebra(hp, P);
  const Fp q(hp.q, hp.p);
  auto content = [&](const Node& g, int prec) {
    return expand_at(LaurentPoly::monomial(hp.p, 1, static_cast<int>(content_exponent(g, hp))), q, prec);
  };

  struct Frame {
    AKAlgebra<SeriesRing>::Vec num;
    int val;
    Series unit;
  };
  struct Leaf {
    std::vector<Node> at;
    Shape shape;
    Frame f;
  };
  std::map<Residues, std::vector<Leaf>> classes;
  std::vector<Frame> stack{{A.unit(), 0, Series::constant(hp.p, P, 1)}};
  struct Tok {
    std::vector<Frame>* st;
    void restore() { st->pop_back(); }
  };
  walk_tableaux(
      n, hp.l,
      [&](int k, const Node& g, const std::vector<Node>& others) {
        Frame f = stack.back();
        for (const auto& o : others) {
          const Series co = content(o, P);
          auto lv = A.left_L(k, f.num);
          for (std::size_t i = 0; i < lv.size(); ++i) lv[i] -= co * f.num[i];
          f.num = std::move(lv);
          const int v = diff_valuation(content_exponent(g, hp), content_exponent(o, hp), hp);
          f.val += v;
          const Series d = (content(g, P + v) - content(o, P + v)).shift_down(v);
          f.unit *= d;
        }
        stack.push_back(std::move(f));
        return Tok{&stack};
      },
      [&](const Shape& cur, const std::vector<Node>& at) {
        classes[residues_of(at, hp)].push_back({at, cur, stack.back()});
      });

  std::vector<ClassIdempotent> out;
  for (auto& [key, leaves] : classes) {
    ClassIdempotent ci;
    ci.key = key;
    int V = 0;
    for (const auto& lf : leaves) V = std::max(V, lf.f.val);
    auto sum = A.zero();
    for (const auto& lf : leaves) {
      ci.members.push_back(tableau_of(lf.shape, lf.at));
      const Series s = shift_up(lf.f.unit.inv(), V - lf.f.val);
      for (int i = 0; i < A.dim(); ++i)
        if (!lf.f.num[i].is_zero()) sum[i] += s * lf.f.num[i];
    }
    ci.valuation = V;
    ci.value.resize(A.dim());
    for (int i = 0; i < A.dim(); ++i) {
      ci.value[i] = sum[i].coeff(V);
      for (int j = 0; j < V; ++j)
        if (sum[i].coeff(j)) {
          ci.pole_order = std::max(ci.pole_order, V - j);
          break;
        }
    }
    if (ci.pole_order > 0 && !allow_poles)
      throw PoleAtSpecialization("class " + residues_str(key) + " has a pole of order " +
                                 std::to_string(ci.pole_order));
    std::sort(ci.members.begin(), ci.members.end());
    out.push_back(std::move(ci));
  }
  return out;
}

std::vector<ClassIdempotent> class_idempotents_rational(const HeckeParams& hp) {
  const auto A = rational_algebra(hp);
  auto content = [&](const Node& g) { return RatFun::monomial(hp.p, 1, static_cast<int>(content_exponent(g, hp))); };
  std::map<Residues, std::pair<std::vector<Tableau>, AKAlgebra<RatRing>::Vec>> classes;
  std::vector<AKAlgebra<RatRing>::Vec> stack{A.unit()};
  struct Tok {
    std::vector<AKAlgebra<RatRing>::Vec>* st;
    void restore() { st->pop_back(); }
  };
  walk_tableaux(
      hp.n, hp.l,
      [&](int k, const Node& g, const std::vector<Node>& others) {
        auto v = stack.back();
        const RatFun cg = content(g);
        for (const auto& o : others) {
          const RatFun co = content(o), d = (cg - co).inv();
          auto lv = A.left_L(k, v);
          for (std::size_t i = 0; i < lv.size(); ++i) lv[i] = (lv[i] - co * v[i]) * d;
          v = std::move(lv);
        }
        stack.push_back(std::move(v));
        return Tok{&stack};
      },
      [&](const Shape& cur, const std::vector<Node>& at) {
        auto& [mem, sum] = classes[residues_of(at, hp)];
        if (sum.empty()) sum = A.zero();
        mem.push_back(tableau_of(cur, at));
        for (int i = 0; i < A.dim(); ++i) sum[i] += stack.back()[i];
      });
  std::vector<ClassIdempotent> out;
  const Fp q(hp.q, hp.p);
  for (auto& [key, ms] : classes) {
    ClassIdempotent ci;
    ci.key = key;
    ci.members = ms.first;
    std::sort(ci.members.begin(), ci.members.end());
    for (const auto& x : ms.second) ci.value.push_back(x.specialize(q).v);
    out.push_back(std::move(ci));
  }
  return out;
}

std::vector<std::uint32_t> e2_by_specialization(const HeckeParams& hp, int j) {
  const auto k = hp.mc.kappa();
  const Residues key{k[j - 1], mod(k[j - 1] + 1, hp.e())};
  for (const auto& c : class_idempotents(hp.with_n(2)))
    if (c.key == key) return c.value;
  throw std::runtime_error("no standard tableau with residues " + residues_str(key));
}

std::vector<std::uint32_t> e2_by_linear_system(const HeckeParams& hp, int j) {
  const auto A = specialized_algebra(hp.with_n(2));
  const int N = A.dim();
  const std::uint32_t p = hp.p;
  const Fp q(hp.q, p);
  const Fp c1 = q.pow(hp.mc.hat_kappa[j - 1]), c2 = c1 * q;
  // Two-sided eigen-conditions: L1 x = x L1 = c1 x, L2 x = x L2 = c2 x,
  // T1 x = x T1 = q x.
  std::vector<std::pair<FpMat, Fp>> conds;
  const FpMat star = to_fpmat(A.star_op(), N, p);
  auto both = [&](const FpMat& left, const Fp& c) {
    conds.emplace_back(left, c);
    conds.emplace_back(star * left * star, c);
  };
  both(to_fpmat(A.left_L_op(1), N, p), c1);
  both(to_fpmat(A.left_L_op(2), N, p), c2);
  both(to_fpmat(A.left_T_op(1), N, p), q);
  Matrix<Fp> M(static_cast<int>(conds.size()) * N, N, Fp(0, p));
  for (std::size_t c = 0; c < conds.size(); ++c)
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        Fp x(conds[c].first(i, k), p);
        if (i == k) x -= conds[c].second;
        M(static_cast<int>(c) * N + i, k) = x;
      }
  const auto ns = nullspace(M, Fp(1, p));
  if (ns.size() != 1)
    throw std::runtime_error("eigen-conditions cut out a space of dimension " + std::to_string(ns.size()));
  const auto& x = ns[0];
  const auto x2 = A.mul(x, x);
  int piv = 0;
  while (x[piv].is_zero()) ++piv;
  const Fp lambda = x2[piv] / x[piv];
  if (lambda.is_zero()) throw std::runtime_error("solution is nilpotent");
  std::vector<std::uint32_t> out;
  for (const auto& c : x) out.push_back((c / lambda).v);
  for (int i = 0; i < N; ++i)
    if (x2[i] != lambda * x[i]) throw std::runtime_error("solution is not proportional to an idempotent");
  return out;
}

std::vector<std::uint32_t> embed_h2(const std::vector<std::uint32_t>& v, const AKBasis& big) {
  const AKBasis small(2, big.l());
  std::vector<std::uint32_t> out(big.size(), 0);
  for (int idx = 0; idx < small.size(); ++idx) {
    if (!v[idx]) continue;
    auto c = small.exps(small.cidx(idx));
    c.resize(big.n(), 0);
    Perm w = perm_identity(big.n());
    const Perm& u = small.perm(small.widx(idx));
    w[0] = u[0];
    w[1] = u[1];
    out[big.index(big.exps_index(c), big.perm_index(w))] = v[idx];
  }
  return out;
}

template class AKAlgebra<FpRing>;
template class AKAlgebra<LaurentRing>;
template class AKAlgebra<RatRing>;
template class AKAlgebra<SeriesRing>;
template std::vector<std::string> check_hecke_relations(const AKAlgebra<FpRing>&);
template std::vector<std::string> check_hecke_relations(const AKAlgebra<LaurentRing>&);
template std::vector<std::string> check_hecke_relations(const AKAlgebra<RatRing>&);

}  // namespace blobcell
