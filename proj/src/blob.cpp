// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/blob.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace blobcell {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::uint32_t neg(std::uint32_t x, std::uint32_t p) { return x ? p - x : 0; }

FpMat minus_scalar(const FpMat& M, std::uint32_t c) {
  FpMat r = M;
  r.add_scaled(FpMat::identity(M.rows(), M.modulus()), neg(c, M.modulus()));
  return r;
}

// Inverse of M = cE + N inside the corner E A E, where N commutes with E and
// is nilpotent there: E/c * sum_k (-N/c)^k, a finite sum.
FpMat inv_corner(const FpMat& M, const FpMat& E, const Fp& c, const std::string& what) {
  if (c.is_zero()) throw RelationFailure(what + " is not invertible");
  const Fp ci = c.inv();
  FpMat step = M;
  step.add_scaled(E, (-c).v);
  step = step.scaled((-ci).v);
  FpMat term = E.scaled(ci.v), sum = term;
  for (int k = 0; k <= M.rows(); ++k) {
    term = step * term;
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw RelationFailure(what + ": the corner part is not nilpotent");
}

Vec32 add_scaled(Vec32 a, const Vec32& b, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = static_cast<std::uint32_t>((a[i] + static_cast<std::uint64_t>(s) * b[i]) % p);
  return a;
}

bool is_zero(const Vec32& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<Residues> all_residue_seqs(int n, int e) {
  std::vector<Residues> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Residues> next;
    for (const auto& r : out)
      for (int j = 0; j < e; ++j) {
        auto s = r;
        s.push_back(j);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

Word reversed(const std::vector<int>& psi_word) {
  Word w;
  for (auto it = psi_word.rbegin(); it != psi_word.rend(); ++it) w.push_back(tok_psi(*it));
  return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word forward(const std::vector<int>& psi_word) {
  Word w;
  for (int a : psi_word) w.push_back(tok_psi(a));
  return w;
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// -------------------------------------------------------------- quotient

OperatorAlgebra hecke_operators(const AKAlgebra<FpRing>& A) {
  OperatorAlgebra H;
  H.p = A.ring().p;
  H.dim = A.dim();
  for (int r = 1; r < A.n(); ++r) H.T.push_back(to_fpmat(A.left_T_op(r), H.dim, H.p));
  for (int k = 1; k <= A.n(); ++k) H.L.push_back(to_fpmat(A.left_L_op(k), H.dim, H.p));
  H.star = to_fpmat(A.star_op(), H.dim, H.p);
  H.unit.assign(H.dim, 0);
  H.unit[0] = 1;
  return H;
}

EchelonSpace two_sided_ideal(const OperatorAlgebra& A, const std::vector<Vec32>& gens) {
  std::vector<FpMat> ops;
  for (const auto& t : A.T) {
    ops.push_back(t);
    ops.push_back(A.star * t * A.star);
  }
  ops.push_back(A.L[0]);
  ops.push_back(A.star * A.L[0] * A.star);
  EchelonSpace S(A.dim, A.p);
  std::deque<Vec32> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Vec32 v = std::move(queue.front());
    queue.pop_front();
    if (!S.insert(v)) continue;
    for (const auto& M : ops) queue.push_back(M.apply(v));
  }
  return S;
}

EchelonSpace ideal_by_products(const AKAlgebra<FpRing>& A, const std::vector<Vec32>& gens, long long* count) {
  using FV = AKAlgebra<FpRing>::Vec;
  const std::uint32_t p = A.ring().p;
  auto to_fv = [&](const Vec32& v) {
    FV out;
    for (auto x : v) out.emplace_back(x, p);
    return out;
  };
  EchelonSpace S(A.dim(), p);
  long long formed = 0;
  for (const auto& g : gens) {
    const FV gv = to_fv(g);
    for (int a = 0; a < A.dim(); ++a) {
      const FV ag = A.mul(A.basis_vector(a), gv);
      for (int b = 0; b < A.dim(); ++b) {
        const FV agb = A.mul(ag, A.basis_vector(b));
        Vec32 v(agb.size());
        for (std::size_t i = 0; i < agb.size(); ++i) v[i] = agb[i].v;
        S.insert(std::move(v));
        ++formed;
      }
    }
  }
  if (count) *count = formed;
  return S;
}

bool same_space(const EchelonSpace& a, const EchelonSpace& b) {
  if (a.dim() != b.dim()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(), [&](const auto& r) { return b.contains(r); });
}

long long expected_blob_dim(int n, int l) {
  long long d = 0;
  for (const auto& s : one_column_multipartitions(n, l)) {
    const long long f = static_cast<long long>(std_tableaux(s).size());
    d += f * f;
  }
  return d;
}

BlobAlgebra::BlobAlgebra(const HeckeParams& hp)
    : hp_(hp), A_(specialized_algebra(hp)), H_(hecke_operators(A_)), I_(1, hp.p) {
  if (hp.n >= 2)
    for (int j = 1; j <= hp.l; ++j) e2_.push_back(embed_h2(e2_by_specialization(hp, j), A_.basis()));
  I_ = two_sided_ideal(H_, e2_);
  for (int c = 0; c < H_.dim; ++c)
    if (!I_.is_pivot(c)) kept_.push_back(c);
  B_.p = hp.p;
  B_.dim = static_cast<int>(kept_.size());
  for (const auto& t : H_.T) B_.T.push_back(induce(t));
  for (const auto& l : H_.L) B_.L.push_back(induce(l));
  B_.star = induce(H_.star);
  B_.unit = project(H_.unit);
  const long long want = expected_blob_dim(hp.n, hp.l);
  if (B_.dim != want)
    throw DimensionMismatch("dim B = " + std::to_string(B_.dim) + " but the one-column tableau count is " +
                            std::to_string(want));
}

Vec32 BlobAlgebra::project(Vec32 h) const {
  I_.reduce(h);
  Vec32 b(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) b[i] = h[kept_[i]];
  return b;
}

Vec32 BlobAlgebra::lift(const Vec32& b) const {
  Vec32 h(H_.dim, 0);
  for (std::size_t i = 0; i < kept_.size(); ++i) h[kept_[i]] = b[i];
  return h;
}

FpMat BlobAlgebra::induce(const FpMat& op) const {
  const int D = static_cast<int>(kept_.size());
  FpMat m(D, D, hp_.p);
  for (int j = 0; j < D; ++j) {
    Vec32 h(H_.dim, 0);
    h[kept_[j]] = 1;
    const auto col = project(op.apply(h));
    for (int i = 0; i < D; ++i) m(i, j) = col[i];
  }
  return m;
}

// ------------------------------------------------------------ KLR images

std::set<Residues> KlrImages::support() const {
  std::set<Residues> s;
  for (const auto& [i, m] : e) s.insert(i);
  return s;
}

KlrImages build_klr(const OperatorAlgebra& A, const HeckeParams& hp) {
  const int n = hp.n, e = hp.e();
  const std::uint32_t p = A.p;
  const Fp q(hp.q, p);
  const FpMat I = FpMat::identity(A.dim, p);
  KlrImages K;
  K.proj.assign(n, {});
  for (int k = 1; k <= n; ++k) {
    const FpMat& L = A.L[k - 1];
    FpMat total(A.dim, A.dim, p);
    for (int j = 0; j < e; ++j) {
      const Fp c = q.pow(j);
      // Lagrange idempotent, then Newton's iteration x <- 3x^2 - 2x^3 lifts
      // it past the nilpotent part.
      FpMat X = I;
      for (int jj = 0; jj < e; ++jj) {
        if (jj == j) continue;
        const Fp cc = q.pow(jj);
        X = X * minus_scalar(L, cc.v);
        X = X.scaled((c - cc).inv().v);
      }
      int it = 0;
      for (;; ++it) {
        if (it > 64) throw RelationFailure("spectral projector did not converge");
        const FpMat X2 = X * X;
        if (X2 == X) break;
        X = X2.scaled(3) - (X2 * X).scaled(2);
      }
      total = total + X;
      K.proj[k - 1].push_back(std::move(X));
    }
    if (total != I) throw RelationFailure("L_" + std::to_string(k) + " has an eigenvalue that is not a power of q");
  }

  // e(i) as products of projectors, pruning zero prefixes.
  Residues pre;
  auto rec = [&](auto&& self, const FpMat& cur) -> void {
    const int k = static_cast<int>(pre.size());
    if (k == n) {
      K.e.emplace(pre, cur);
      return;
    }
    for (int j = 0; j < e; ++j) {
      const FpMat& P = K.proj[k][j];
      if (P.is_zero()) continue;
      FpMat M = k == 0 ? P : cur * P;
      if (M.is_zero()) continue;
      pre.push_back(j);
      self(self, M);
      pre.pop_back();
    }
  };
  rec(rec, I);

  // y_k = 1 - sum_j q^-j L_k P_k(j).
  for (int k = 1; k <= n; ++k) {
    FpMat S(A.dim, A.dim, p);
    for (int j = 0; j < e; ++j) S.add_scaled(K.proj[k - 1][j], q.pow(-j).v);
    K.y.push_back(I - A.L[k - 1] * S);
  }

  for (int r = 1; r < n; ++r) {
    FpMat psi(A.dim, A.dim, p);
    const FpMat &Lr = A.L[r - 1], &Lr1 = A.L[r], &T = A.T[r - 1];
    for (const auto& [i, E] : K.e) {
      const int a = i[r - 1], b = i[r];
      const std::string at = " at " + residues_str(i) + ", r = " + std::to_string(r);
      FpMat piece;
      const Fp one(1, p), qa = q.pow(a), qb = q.pow(b);
      if (a == b) {
        // Q = -(1 - q + q y_{r+1} - y_r), P = 1.
        FpMat Q = I.scaled((one - q).v);
        Q.add_scaled(K.y[r], q.v);
        Q.add_scaled(K.y[r - 1], p - 1);
        Q = (Q * E).scaled(p - 1);
        piece = (T + I) * inv_corner(Q, E, q - one, "Q" + at);
      } else {
        const FpMat D = (Lr1 - Lr) * E;
        const FpMat Dinv = inv_corner(D, E, qb - qa, "x_{r+1} - x_r" + at);
        const FpMat P = (Lr1 * Dinv).scaled((one - q).v);
        const FpMat R = (Lr - Lr1.scaled(q.v)) * E;
        FpMat Qinv;
        if (b == mod(a + 1, e)) {
          Qinv = D * D * inv_corner(R, E, qa - q * qb, "x_r - q x_{r+1}" + at);
        } else if (b == mod(a - 1, e)) {
          Qinv = E.scaled(q.pow(-a).v);
        } else {
          Qinv = D.scaled(p - 1) * inv_corner(R, E, qa - q * qb, "x_r - q x_{r+1}" + at);
        }
        piece = (T + P) * Qinv;
      }
      psi = psi + piece;
    }
    K.psi.push_back(std::move(psi));
  }

  for (int k = 1; k <= n; ++k) {
    FpMat S(A.dim, A.dim, p);
    for (const auto& [i, E] : K.e) S.add_scaled(E, q.pow(i[k - 1]).v);
    K.jm.push_back((I - K.y[k - 1]) * S);
  }

  // Basis words w e(i) by closing under left multiplication by y and psi;
  // star sends w e(i) to the reversed word.
  EchelonSpace span(A.dim, p);
  std::vector<Vec32> cols;
  std::deque<std::pair<Word, Vec32>> queue;
  for (const auto& [i, E] : K.e) queue.push_back({{tok_e(i)}, E.apply(A.unit)});
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    if (!span.insert(v)) continue;
    for (int k = 1; k <= n; ++k) queue.push_back({cat({tok_y(k)}, w), K.y[k - 1].apply(v)});
    for (int r = 1; r < n; ++r) queue.push_back({cat({tok_psi(r)}, w), K.psi[r - 1].apply(v)});
    K.words.push_back(std::move(w));
    cols.push_back(std::move(v));
  }
  if (static_cast<int>(cols.size()) != A.dim)
    throw RelationFailure("words in e, y, psi span only " + std::to_string(cols.size()) + " of " +
                          std::to_string(A.dim) + " dimensions");
  FpMat W(A.dim, A.dim, p), R(A.dim, A.dim, p);
  for (int j = 0; j < A.dim; ++j) {
    const auto rv = act(A, K, reversed(K.words[j]), A.unit);
    for (int i = 0; i < A.dim; ++i) {
      W(i, j) = cols[j][i];
      R(i, j) = rv[i];
    }
  }
  K.star = R * *W.inverse();
  return K;
}

Token tok_e(Residues i) { return Token{Token::E, 0, std::move(i)}; }
Token tok_y(int k) { return Token{Token::Y, k, {}}; }
Token tok_psi(int r) { return Token{Token::Psi, r, {}}; }

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) os << " ";
    switch (w[t].kind) {
      case Token::E: os << "e" << residues_str(w[t].i); break;
      case Token::Y: os << "y" << w[t].a; break;
      case Token::Psi: os << "psi" << w[t].a; break;
    }
  }
  return os.str();
}

int psi_degree(const Residues& i, int r, int e) {
  const int a = i[r - 1], b = i[r];
  if (a == b) return -2;
  const int d = mod(b - a, e);
  return d == 1 || d == e - 1 ? 1 : 0;
}

std::optional<int> word_degree(const Word& w, int e) {
  const int m = static_cast<int>(w.size());
  int seed = -1;
  for (int t = 0; t < m && seed < 0; ++t)
    if (w[t].kind == Token::E) seed = t;
  if (seed < 0) {
    int d = 0;
    for (const auto& t : w) {
      if (t.kind == Token::Psi) throw std::invalid_argument("degree of psi needs an idempotent in the word");
      d += 2;
    }
    return d;
  }
  // seq[t] is the residue sequence to the left of token t.
  std::vector<Residues> seq(m + 1);
  seq[seed] = seq[seed + 1] = w[seed].i;
  for (int t = seed - 1; t >= 0; --t) {
    const auto& tk = w[t];
    if (tk.kind == Token::E && tk.i != seq[t + 1]) return std::nullopt;
    seq[t] = tk.kind == Token::Psi ? act_residues(seq[t + 1], tk.a) : seq[t + 1];
  }
  for (int t = seed + 1; t < m; ++t) {
    const auto& tk = w[t];
    if (tk.kind == Token::E && tk.i != seq[t]) return std::nullopt;
    seq[t + 1] = tk.kind == Token::Psi ? act_residues(seq[t], tk.a) : seq[t];
  }
  int d = 0;
  for (int t = 0; t < m; ++t) {
    if (w[t].kind == Token::Y) d += 2;
    if (w[t].kind == Token::Psi) d += psi_degree(seq[t + 1], w[t].a, e);
  }
  return d;
}

Vec32 act(const OperatorAlgebra& A, const KlrImages& K, const Word& w, Vec32 v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case Token::E: {
        auto f = K.e.find(it->i);
        if (f == K.e.end()) return Vec32(A.dim, 0);
        v = f->second.apply(v);
        break;
      }
      case Token::Y: v = K.y[it->a - 1].apply(v); break;
      case Token::Psi: v = K.psi[it->a - 1].apply(v); break;
    }
  }
  return v;
}

Vec32 evaluate(const OperatorAlgebra& A, const KlrImages& K, const Word& w) { return act(A, K, w, A.unit); }

std::vector<RelationInstance> klr_relation_instances(const HeckeParams& hp, bool include_eq13,
                                                     const std::set<Residues>& support) {
  const int n = hp.n, e = hp.e();
  const auto kv = hp.mc.kappa();
  const std::set<int> kappa(kv.begin(), kv.end());
  std::vector<RelationInstance> out;
  auto add = [&](const char* name, const Residues& i, std::string detail, std::vector<Term> terms) {
    out.push_back({name, i, std::move(detail), std::move(terms)});
  };
  auto rs = [](int r) { return "r=" + std::to_string(r); };

  for (const auto& i : support)
    for (const auto& j : support) {
      std::vector<Term> t{{1, {tok_e(i), tok_e(j)}}};
      if (i == j) t.push_back({-1, {tok_e(i)}});
      add("orto1", i, "j=" + residues_str(j), t);
    }
  {
    std::vector<Term> t{{-1, {}}};
    for (const auto& i : support) t.push_back({1, {tok_e(i)}});
    add("sum1", {}, "", t);
  }
  for (const auto& i : all_residue_seqs(n, e)) {
    const Token E = tok_e(i);
    const bool start = kappa.count(i[0]) > 0;
    if (!start) add("eq12", i, "", {{1, {E}}});
    if (include_eq13 && start && n >= 2 && i[1] == mod(i[0] + 1, e)) add("eq13", i, "", {{1, {E}}});
    if (start) add("eq13a", i, "", {{1, {tok_y(1), E}}});
    for (int r = 1; r <= n; ++r) add("eq3", i, rs(r), {{1, {tok_y(r), E}}, {-1, {E, tok_y(r)}}});
    for (int r = 1; r < n; ++r)
      add("eq4", i, rs(r), {{1, {tok_psi(r), E}}, {-1, {tok_e(act_residues(i, r)), tok_psi(r)}}});
    for (int r = 1; r <= n; ++r)
      for (int s = r + 1; s <= n; ++s)
        add("eq5", i, rs(r) + " s=" + std::to_string(s),
            {{1, {tok_y(r), tok_y(s), E}}, {-1, {tok_y(s), tok_y(r), E}}});
    for (int r = 1; r < n; ++r)
      for (int s = 1; s <= n; ++s)
        if (s != r && s != r + 1)
          add("eq6", i, rs(r) + " s=" + std::to_string(s),
              {{1, {tok_psi(r), tok_y(s), E}}, {-1, {tok_y(s), tok_psi(r), E}}});
    for (int r = 1; r < n; ++r)
      for (int s = r + 2; s < n; ++s)
        add("eq7", i, rs(r) + " s=" + std::to_string(s),
            {{1, {tok_psi(r), tok_psi(s), E}}, {-1, {tok_psi(s), tok_psi(r), E}}});
    for (int r = 1; r < n; ++r) {
      const int a = i[r - 1], b = i[r];
      const long long delta = a == b ? 1 : 0;
      std::vector<Term> t8{{1, {tok_psi(r), tok_y(r + 1), E}}, {-1, {tok_y(r), tok_psi(r), E}}};
      std::vector<Term> t9{{1, {tok_y(r + 1), tok_psi(r), E}}, {-1, {tok_psi(r), tok_y(r), E}}};
      if (delta) {
        t8.push_back({1, {E}});
        t9.push_back({1, {E}});
      }
      add("eq8", i, rs(r), t8);
      add("eq9", i, rs(r), t9);
      std::vector<Term> t10{{1, {tok_psi(r), tok_psi(r), E}}};
      if (a == b) {
      } else if (b == mod(a + 1, e)) {
        t10.push_back({-1, {tok_y(r + 1), E}});
        t10.push_back({1, {tok_y(r), E}});
      } else if (b == mod(a - 1, e)) {
        t10.push_back({-1, {tok_y(r), E}});
        t10.push_back({1, {tok_y(r + 1), E}});
      } else {
        t10.push_back({-1, {E}});
      }
      add("eq10", i, rs(r), t10);
    }
    for (int r = 1; r + 1 < n; ++r) {
      const int a = i[r - 1], b = i[r], c = i[r + 1];
      std::vector<Term> t{{1, {tok_psi(r), tok_psi(r + 1), tok_psi(r), E}},
                          {-1, {tok_psi(r + 1), tok_psi(r), tok_psi(r + 1), E}}};
      if (c == a && a == mod(b - 1, e)) t.push_back({1, {E}});
      if (c == a && a == mod(b + 1, e)) t.push_back({-1, {E}});
      add("eq11", i, rs(r), t);
    }
  }
  return out;
}

std::vector<Report> check_klr_relations(const OperatorAlgebra& A, const KlrImages& K, const HeckeParams& hp,
                                        bool include_eq13) {
  std::vector<Report> reps;
  std::map<std::string, std::size_t> at;
  for (const char* name :
       {"orto1", "eq12", "eq13", "eq13a", "sum1", "eq3", "eq4", "eq5", "eq6", "eq7", "eq8", "eq9", "eq10", "eq11"}) {
    if (!include_eq13 && std::string(name) == "eq13") continue;
    at[name] = reps.size();
    reps.push_back({name, 0, {}});
  }
  for (const auto& inst : klr_relation_instances(hp, include_eq13, K.support())) {
    auto& rep = reps[at.at(inst.relation)];
    ++rep.checked;
    Vec32 sum(A.dim, 0);
    for (const auto& t : inst.terms)
      sum = add_scaled(sum, evaluate(A, K, t.word), Fp(t.coef, A.p).v, A.p);
    if (!is_zero(sum)) rep.violations.push_back(inst.relation + " at i=" + residues_str(inst.witness) + " " + inst.detail);
  }
  return reps;
}

Report check_homogeneity(const HeckeParams& hp) {
  // orto1 and sum1 only involve idempotents and are homogeneous of degree 0.
  Report rep{"homogeneity", 0, {}};
  for (const auto& inst : klr_relation_instances(hp, true, {})) {
    ++rep.checked;
    std::optional<int> deg;
    for (const auto& t : inst.terms) {
      const auto d = word_degree(t.word, hp.e());
      if (!d) continue;
      if (deg && *deg != *d) {
        rep.violations.push_back(inst.relation + " at i=" + residues_str(inst.witness) + " " + inst.detail);
        break;
      }
      deg = d;
    }
  }
  return rep;
}

std::vector<Report> check_klr_structure(const OperatorAlgebra& A, const KlrImages& K) {
  Report star{"star anti-involution fixing generators", 0, {}}, hstar{"H star fixes e(i) and y_k", 0, {}},
      nil{"y nilpotent", 0, {}}, jm{"JM = L", 0, {}}, jms{"JM star and commute", 0, {}};
  std::vector<std::pair<Word, const FpMat*>> gens;
  for (const auto& [i, E] : K.e) gens.push_back({{tok_e(i)}, &E});
  for (std::size_t k = 0; k < K.y.size(); ++k) gens.push_back({{tok_y(static_cast<int>(k) + 1)}, &K.y[k]});
  for (std::size_t r = 0; r < K.psi.size(); ++r) gens.push_back({{tok_psi(static_cast<int>(r) + 1)}, &K.psi[r]});
  ++star.checked;
  if (K.star * K.star != FpMat::identity(A.dim, A.p)) star.violations.push_back("star^2 != 1");
  ++star.checked;
  if (K.star.apply(A.unit) != A.unit) star.violations.push_back("star(1) != 1");
  for (const auto& [g, M] : gens) {
    ++star.checked;
    const auto v = M->apply(A.unit);
    if (K.star.apply(v) != v) star.violations.push_back(word_str(g) + " not fixed");
    // star(g w) = star(w) g on every basis word w.
    for (const auto& w : K.words) {
      ++star.checked;
      if (K.star.apply(M->apply(evaluate(A, K, w))) != evaluate(A, K, cat(reversed(w), g))) {
        star.violations.push_back("star(" + word_str(g) + " " + word_str(w) + ")");
        break;
      }
    }
    if (g[0].kind != Token::Psi) {
      ++hstar.checked;
      if (A.star.apply(v) != v) hstar.violations.push_back(word_str(g));
    }
  }
  for (std::size_t k = 0; k < K.y.size(); ++k) {
    ++nil.checked;
    auto v = A.unit;
    for (int it = 0; it < A.dim && !is_zero(v); ++it) v = K.y[k].apply(v);
    if (!is_zero(v)) nil.violations.push_back("y" + std::to_string(k + 1));
    ++jm.checked;
    if (K.jm[k] != A.L[k]) jm.violations.push_back("JM" + std::to_string(k + 1));
    const auto v1 = K.jm[k].apply(A.unit);
    ++jms.checked;
    if (K.star.apply(v1) != v1) jms.violations.push_back("JM" + std::to_string(k + 1) + "* != JM");
    for (std::size_t j = 0; j < K.jm.size(); ++j)
      if (K.jm[k].apply(K.jm[j].apply(A.unit)) != K.jm[j].apply(v1))
        jms.violations.push_back("JM" + std::to_string(k + 1) + " JM" + std::to_string(j + 1));
  }
  return {star, hstar, nil, jm, jms};
}

bool directly_killed(const Residues& i, const HeckeParams& hp) {
  const auto kv = hp.mc.kappa();
  if (std::find(kv.begin(), kv.end(), i[0]) == kv.end()) return true;
  return i.size() >= 2 && i[1] == mod(i[0] + 1, hp.e());
}

Eq13Comparison compare_eq13_quotient(const BlobAlgebra& B, const KlrImages& KH) {
  const auto& hp = B.params();
  const auto& H = B.hecke_ops();
  Eq13Comparison c;
  std::vector<Vec32> gens;
  for (const auto& [i, E] : KH.e)
    if (directly_killed(i, hp)) {
      c.direct.insert(i);
      gens.push_back(E.apply(H.unit));
    }
  const EchelonSpace J = two_sided_ideal(H, gens);
  c.dim_ideal_e2 = B.ideal().dim();
  c.dim_ideal_eq13 = J.dim();
  c.same_ideal = same_space(J, B.ideal());
  for (const auto& [i, E] : KH.e) {
    const auto v = E.apply(H.unit);
    if (B.ideal().contains(v)) c.vanish_e2.insert(i);
    if (J.contains(v)) c.vanish_eq13.insert(i);
  }
  for (const auto& shape : one_column_multipartitions(hp.n, hp.l))
    for (const auto& t : std_tableaux(shape)) c.one_column.insert(residue_seq(t, hp.mc));
  return c;
}

// --------------------------------------------------------- cellular basis

std::vector<int> official_word(const Perm& w) { return lexmin_reduced_word(w); }

FpMat psi_of(const OperatorAlgebra& A, const KlrImages& K, const std::vector<int>& word) {
  FpMat M = FpMat::identity(A.dim, A.p);
  for (int a : word) M = M * K.psi[a - 1];
  return M;
}

CellularBasis build_cellular_basis(const OperatorAlgebra& B, const KlrImages& K, const HeckeParams& hp) {
  CellularBasis cb;
  const auto theta = theta_zero(hp.l);
  for (const auto& shape : one_column_multipartitions(hp.n, hp.l)) {
    CellShape cs;
    cs.shape = shape;
    cs.t_lambda = t_lambda(shape, theta);
    cs.i_lambda = residue_seq(cs.t_lambda, hp.mc);
    cs.tabs = std_tableaux(shape);
    for (const auto& t : cs.tabs) {
      cs.words.push_back(official_word(d_perm(t, theta)));
      const auto d = word_degree(cat({tok_e(cs.i_lambda)}, forward(cs.words.back())), hp.e());
      cs.degree.push_back(d.value_or(0));
    }
    cb.shapes.push_back(std::move(cs));
  }
  for (int b = 0; b < static_cast<int>(cb.shapes.size()); ++b) {
    const auto& cs = cb.shapes[b];
    const int m = static_cast<int>(cs.tabs.size());
    cb.offset.emplace_back(m, std::vector<int>(m));
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        const Word w = cat(cat(reversed(cs.words[s]), {tok_e(cs.i_lambda)}), forward(cs.words[t]));
        cb.offset[b][s][t] = static_cast<int>(cb.vectors.size());
        cb.labels.push_back({b, s, t});
        cb.vectors.push_back(evaluate(B, K, w));
        cb.degree.push_back(word_degree(w, hp.e()).value_or(0));
      }
  }
  const int N = static_cast<int>(cb.vectors.size());
  FpMat M(B.dim, N, B.p);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < B.dim; ++i) M(i, j) = cb.vectors[j][i];
  cb.rank = M.rank();
  if (N != B.dim || cb.rank != B.dim)
    throw RelationFailure("cellular basis has " + std::to_string(N) + " elements of rank " +
                          std::to_string(cb.rank) + " in dimension " + std::to_string(B.dim));
  cb.coords = *M.inverse();
  return cb;
}

Report check_star_symmetry(const KlrImages& K, const CellularBasis& cb) {
  Report rep{"m_ST* = m_TS", 0, {}};
  for (std::size_t x = 0; x < cb.vectors.size(); ++x) {
    const auto [b, s, t] = cb.labels[x];
    ++rep.checked;
    if (K.star.apply(cb.vectors[x]) != cb.vectors[cb.index(b, t, s)])
      rep.violations.push_back("shape " + shape_str(cb.shapes[b].shape) + " S=" + cb.shapes[b].tabs[s].str() +
                               " T=" + cb.shapes[b].tabs[t].str());
  }
  return rep;
}

namespace {

struct Generator {
  std::string name;
  Word word;
  const FpMat* mat;
};

std::vector<Generator> generators(const KlrImages& K) {
  std::vector<Generator> g;
  for (const auto& [i, E] : K.e) g.push_back({"e" + residues_str(i), {tok_e(i)}, &E});
  for (std::size_t k = 0; k < K.y.size(); ++k)
    g.push_back({"y" + std::to_string(k + 1), {tok_y(static_cast<int>(k) + 1)}, &K.y[k]});
  for (std::size_t r = 0; r < K.psi.size(); ++r)
    g.push_back({"psi" + std::to_string(r + 1), {tok_psi(static_cast<int>(r) + 1)}, &K.psi[r]});
  return g;
}

Word basis_word(const CellularBasis& cb, int x) {
  const auto [b, s, t] = cb.labels[x];
  const auto& cs = cb.shapes[b];
  return cat(cat(reversed(cs.words[s]), {tok_e(cs.i_lambda)}), forward(cs.words[t]));
}

std::string pair_str(const CellularBasis& cb, int x) {
  const auto [b, s, t] = cb.labels[x];
  const auto& cs = cb.shapes[b];
  return "m[" + cs.tabs[s].str() + "," + cs.tabs[t].str() + "]";
}

}  // namespace

std::vector<Report> check_cellularity(const OperatorAlgebra&, const KlrImages& K, const CellularBasis& cb,
                                      const HeckeParams& hp) {
  Report cell{"cellularity (ii)", 0, {}}, indep{"T-independence", 0, {}}, grade{"grading", 0, {}};
  const auto theta = theta_zero(hp.l);
  const int N = static_cast<int>(cb.vectors.size());
  for (const auto& g : generators(K)) {
    std::vector<Vec32> coeff(N);
    for (int x = 0; x < N; ++x) coeff[x] = cb.expand(g.mat->apply(cb.vectors[x]));
    for (int x = 0; x < N; ++x) {
      const auto [b, s, t] = cb.labels[x];
      const auto& cs = cb.shapes[b];
      const int t0 = cb.index(b, s, static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), cs.t_lambda) - cs.tabs.begin()));
      const auto [b0, s0, tl] = cb.labels[t0];
      (void)b0;
      (void)s0;
      ++cell.checked;
      ++indep.checked;
      ++grade.checked;
      const auto& c = coeff[x];
      const auto want = word_degree(cat(g.word, basis_word(cb, x)), hp.e());
      for (int z = 0; z < N; ++z) {
        if (!c[z]) continue;
        const auto [bz, uz, vz] = cb.labels[z];
        if (bz == b) {
          if (vz != t) cell.violations.push_back(g.name + " " + pair_str(cb, x) + " has term " + pair_str(cb, z));
        } else if (dominance_cmp(cb.shapes[bz].shape, cs.shape, theta) != Cmp::greater) {
          cell.violations.push_back(g.name + " " + pair_str(cb, x) + " has lower term " + pair_str(cb, z));
        }
        if (!want || cb.degree[z] != *want)
          grade.violations.push_back(g.name + " " + pair_str(cb, x) + " meets " + pair_str(cb, z));
      }
      // r_{u,s,a} read at T = T^lambda must reproduce the coefficients at T.
      for (int u = 0; u < static_cast<int>(cs.tabs.size()); ++u)
        if (c[cb.index(b, u, t)] != coeff[t0][cb.index(b, u, tl)]) {
          indep.violations.push_back(g.name + " " + pair_str(cb, x) + " at U=" + cs.tabs[u].str());
          break;
        }
    }
  }
  return {cell, indep, grade};
}

std::vector<Report> check_jm(const OperatorAlgebra& B, const KlrImages& K, const CellularBasis& cb,
                             const HeckeParams& hp) {
  Report right{"JM right triangular", 0, {}}, left{"JM left triangular", 0, {}}, eq{"JM = image of L", 0, {}};
  const auto theta = theta_zero(hp.l);
  const Fp q(hp.q, hp.p);
  const int N = static_cast<int>(cb.vectors.size());
  for (int k = 1; k <= hp.n; ++k) {
    ++eq.checked;
    if (K.jm[k - 1] != B.L[k - 1]) eq.violations.push_back("JM" + std::to_string(k));
    for (int side = 0; side < 2; ++side)
      for (int x = 0; x < N; ++x) {
        const auto [b, s, t] = cb.labels[x];
        const auto& cs = cb.shapes[b];
        const auto& v = cb.vectors[x];
        // m JM = (JM m*)* since JM is *-fixed.
        const Vec32 img = side == 0 ? K.star.apply(K.jm[k - 1].apply(K.star.apply(v))) : K.jm[k - 1].apply(v);
        const auto c = cb.expand(img);
        const int moving = side == 0 ? t : s;
        const auto diag = q.pow(residue(cs.tabs[moving].node(k), hp.mc)).v;
        Report& rep = side == 0 ? right : left;
        ++rep.checked;
        const std::string who = "JM" + std::to_string(k) + " " + pair_str(cb, x);
        if (c[x] != diag) rep.violations.push_back(who + " diagonal");
        for (int z = 0; z < N; ++z) {
          if (!c[z] || z == x) continue;
          const auto [bz, uz, vz] = cb.labels[z];
          if (bz != b) {
            if (dominance_cmp(cb.shapes[bz].shape, cs.shape, theta) != Cmp::greater)
              rep.violations.push_back(who + " lower term " + pair_str(cb, z));
            continue;
          }
          const int fixed = side == 0 ? uz : vz, var = side == 0 ? vz : uz, keep = side == 0 ? s : t;
          if (fixed != keep || tableau_cmp(cs.tabs[var], cs.tabs[moving], theta) != Cmp::greater)
            rep.violations.push_back(who + " term " + pair_str(cb, z));
        }
      }
  }
  return {right, left, eq};
}

Report check_degree_additivity(const CellularBasis& cb, const HeckeParams& hp) {
  (void)hp;
  Report rep{"degree additivity", 0, {}};
  for (int b = 0; b < static_cast<int>(cb.shapes.size()); ++b) {
    const auto& cs = cb.shapes[b];
    const int m = static_cast<int>(cs.tabs.size());
    const int tl = static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), cs.t_lambda) - cs.tabs.begin());
    for (int t = 0; t < m; ++t) {
      const int ref = cb.degree[cb.index(b, 0, t)] - cb.degree[cb.index(b, 0, tl)];
      for (int s = 0; s < m; ++s) {
        ++rep.checked;
        const int d = cb.degree[cb.index(b, s, t)];
        if (d - cb.degree[cb.index(b, s, tl)] != ref || d != cs.degree[s] + cs.degree[t])
          rep.violations.push_back("shape " + shape_str(cs.shape) + " " + pair_str(cb, cb.index(b, s, t)));
      }
    }
  }
  return rep;
}

std::vector<CellModule> cell_modules(const OperatorAlgebra& B, const KlrImages& K, const CellularBasis& cb,
                                     const HeckeParams& hp) {
  std::vector<CellModule> out;
  for (int b = 0; b < static_cast<int>(cb.shapes.size()); ++b) {
    const auto& cs = cb.shapes[b];
    const int m = static_cast<int>(cs.tabs.size());
    const int tl = static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), cs.t_lambda) - cs.tabs.begin());
    CellModule cm;
    cm.shape = cs.shape;
    cm.dim = m;
    cm.gram = FpMat(m, m, hp.p);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        // m_{T^lambda,S} m_{T,T^lambda} = e(i^lambda) psi_{d(S)} m_{T,T^lambda}.
        const Word w = cat({tok_e(cs.i_lambda)}, forward(cs.words[s]));
        const auto c = cb.expand(act(B, K, w, cb.vectors[cb.index(b, t, tl)]));
        for (int u = 0; u < m; ++u)
          for (int v = 0; v < m; ++v)
            if (c[cb.index(b, u, v)] && !(u == tl && v == tl))
              throw RelationFailure("Gram product leaves the top cell at " + shape_str(cs.shape));
        cm.gram(s, t) = c[cb.index(b, tl, tl)];
      }
    cm.gram_rank = cm.gram.rank();
    for (const auto& g : generators(K)) {
      FpMat R(m, m, hp.p);
      for (int s = 0; s < m; ++s) {
        const auto c = cb.expand(g.mat->apply(cb.vectors[cb.index(b, s, tl)]));
        for (int u = 0; u < m; ++u) R(u, s) = c[cb.index(b, u, tl)];
      }
      cm.action.emplace(g.name, std::move(R));
    }
    out.push_back(std::move(cm));
  }
  return out;
}

}  // namespace blobcell
