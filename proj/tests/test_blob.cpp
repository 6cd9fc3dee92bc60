// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "blobcell/blob.hpp"

using namespace blobcell;

namespace {

struct Built {
  HeckeParams hp;
  BlobAlgebra B;
  KlrImages K;
  CellularBasis cb;
  explicit Built(const HeckeParams& p)
      : hp(p), B(p), K(build_klr(B.ops(), p)), cb(build_cellular_basis(B.ops(), K, p)) {}
};

// Individual relations may be vacuous at small n (eq7 needs n >= 4).
void require_clean(const std::vector<Report>& reps) {
  long long total = 0;
  for (const auto& r : reps) {
    INFO(r.name << ": " << (r.violations.empty() ? "" : r.violations.front()));
    CHECK(r.pass());
    total += r.checked;
  }
  CHECK(total > 0);
}

bool is_zero(const Vec32& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

int top_index(const CellShape& cs) {
  return static_cast<int>(std::find(cs.tabs.begin(), cs.tabs.end(), cs.t_lambda) - cs.tabs.begin());
}

const std::vector<std::pair<int, int>> kCases = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};

}  // namespace

TEST_CASE("dimension law") {
  // Sum of squared multinomials, written out independently of the tableaux.
  CHECK(expected_blob_dim(2, 2) == 1 + 4 + 1);
  CHECK(expected_blob_dim(3, 2) == 1 + 9 + 9 + 1);
  CHECK(expected_blob_dim(4, 2) == 1 + 16 + 36 + 16 + 1);
  CHECK(expected_blob_dim(2, 3) == 3 * 1 + 3 * 4);
  CHECK(expected_blob_dim(3, 3) == 3 * 1 + 6 * 9 + 36);
  for (auto [n, l] : kCases) {
    CAPTURE(n);
    CAPTURE(l);
    const BlobAlgebra B(HeckeParams::preset(n, l));
    CHECK(B.hecke_dim() - B.ideal().dim() == B.dim());
    CHECK(B.dim() == expected_blob_dim(n, l));
  }
}

TEST_CASE("ideal of e2 at n=2, l=2") {
  const auto hp = HeckeParams::preset(2, 2);
  const BlobAlgebra B(hp);
  CHECK(B.hecke_dim() == 8);
  CHECK(B.ideal().dim() == 2);
  long long formed = 0;
  const auto direct = ideal_by_products(B.hecke(), B.e2(), &formed);
  CHECK(formed == 2 * 8 * 8);
  CHECK(direct.dim() == 2);
  CHECK(same_space(direct, B.ideal()));
}

TEST_CASE("closure ideal equals the product span at n=3, l=2") {
  const BlobAlgebra B(HeckeParams::preset(3, 2));
  CHECK(same_space(ideal_by_products(B.hecke(), B.e2()), B.ideal()));
}

TEST_CASE("quotient inherits the Hecke relations") {
  const BlobAlgebra B(HeckeParams::preset(3, 2));
  const auto& o = B.ops();
  const auto I = FpMat::identity(o.dim, o.p);
  const std::uint32_t q = B.params().q;
  for (const auto& T : o.T) CHECK((T + I) * (T - I.scaled(q)) == FpMat(o.dim, o.dim, o.p));
  CHECK(o.T[0] * o.T[1] * o.T[0] == o.T[1] * o.T[0] * o.T[1]);
  CHECK(o.star * o.star == I);
  CHECK(o.star.apply(o.unit) == o.unit);
}

TEST_CASE("KLR relations in B, including eq13") {
  for (auto [n, l] : kCases) {
    if (n > 3) continue;
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const BlobAlgebra B(hp);
    const auto K = build_klr(B.ops(), hp);
    require_clean(check_klr_relations(B.ops(), K, hp, true));
    require_clean(check_klr_structure(B.ops(), K));
  }
}

TEST_CASE("KLR relations in H, without eq13") {
  for (auto [n, l] : kCases) {
    if (n > 3) continue;
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const BlobAlgebra B(hp);
    const auto KH = build_klr(B.hecke_ops(), hp);
    require_clean(check_klr_relations(B.hecke_ops(), KH, hp, false));
    // eq13 itself is not a relation of H: some directly killed e(i) survive.
    bool survives = false;
    for (const auto& [i, E] : KH.e) survives = survives || directly_killed(i, hp);
    CHECK(survives);
  }
}

TEST_CASE("KLR relations at n=4, l=2") {
  const auto hp = HeckeParams::preset(4, 2);
  const BlobAlgebra B(hp);
  const auto K = build_klr(B.ops(), hp);
  require_clean(check_klr_relations(B.ops(), K, hp, true));
}

TEST_CASE("e(i) equals the class idempotent and the eigenspace projector") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const BlobAlgebra B(hp);
    const auto KH = build_klr(B.hecke_ops(), hp);
    const auto classes = class_idempotents(hp);
    CHECK(classes.size() == KH.e.size());
    for (const auto& c : classes) {
      CAPTURE(residues_str(c.key));
      REQUIRE(KH.e.count(c.key));
      CHECK(KH.e.at(c.key).apply(B.hecke_ops().unit) == c.value);
    }
    // Generalized eigenspace: (L_k - q^{i_k}) is nilpotent on e(i) H.
    const auto& H = B.hecke_ops();
    for (const auto& [i, E] : KH.e)
      for (int k = 1; k <= n; ++k) {
        FpMat N = H.L[k - 1];
        N.add_scaled(FpMat::identity(H.dim, H.p), H.p - Fp(hp.q, hp.p).pow(i[k - 1]).v);
        FpMat P = N * E;
        for (int it = 0; it < H.dim && !P.is_zero(); ++it) P = N * P;
        CHECK(P.is_zero());
      }
  }
}

TEST_CASE("e(i) support and eq12/eq13 examples") {
  const auto hp = HeckeParams::preset(3, 2);  // kappa = (0,2), e = 5
  const BlobAlgebra B(hp);
  const auto K = build_klr(B.ops(), hp);
  for (const auto& [i, E] : K.e) {
    CHECK_FALSE(directly_killed(i, hp));
    CHECK(E * E == E);
  }
  CHECK_FALSE(K.e.count({0, 1, 2}));
  CHECK_FALSE(K.e.count({2, 3, 4}));
  CHECK_FALSE(K.e.count({1, 0, 4}));
}

TEST_CASE("JM elements") {
  const auto hp = HeckeParams::preset(2, 2);
  const BlobAlgebra B(hp);
  const auto K = build_klr(B.ops(), hp);
  const auto& o = B.ops();
  const Fp qinv = Fp(hp.q, hp.p).inv();
  CHECK(K.jm[1] == (o.T[0] * K.jm[0] * o.T[0]).scaled(qinv.v));
  CHECK(K.jm[1] == o.L[1]);
}

TEST_CASE("homogeneity of the relations") {
  for (auto [n, l] : kCases) {
    if (n > 3) continue;
    const auto r = check_homogeneity(HeckeParams::preset(n, l));
    CHECK(r.checked > 0);
    CHECK(r.pass());
  }
  CHECK(psi_degree({0, 0}, 1, 5) == -2);
  CHECK(psi_degree({0, 1}, 1, 5) == 1);
  CHECK(psi_degree({0, 4}, 1, 5) == 1);
  CHECK(psi_degree({0, 2}, 1, 5) == 0);
  CHECK(word_degree({tok_y(1), tok_psi(1), tok_e({0, 0})}, 5) == 0);
  CHECK_FALSE(word_degree({tok_e({1, 0}), tok_psi(1), tok_e({1, 0})}, 5).has_value());
}

TEST_CASE("cellular basis at n=2, l=2") {
  const Built b(HeckeParams::preset(2, 2));
  CHECK(b.cb.vectors.size() == 6);
  CHECK(b.cb.rank == 6);
  for (const auto& v : b.cb.vectors) CHECK(v.size() == 6);
}

TEST_CASE("cellular basis: rank, symmetry, cellularity, JM, degrees") {
  for (auto [n, l] : kCases) {
    CAPTURE(n);
    CAPTURE(l);
    const Built b(HeckeParams::preset(n, l));
    CHECK(b.cb.rank == b.B.dim());
    CHECK(static_cast<int>(b.cb.vectors.size()) == b.B.dim());
    for (int s = 0; s < static_cast<int>(b.cb.shapes.size()); ++s) {
      const auto& cs = b.cb.shapes[s];
      const int t0 = top_index(cs);
      CHECK(b.cb.vectors[b.cb.index(s, t0, t0)] == b.K.e.at(cs.i_lambda).apply(b.B.ops().unit));
      CHECK(cs.words[t0].empty());
    }
    auto sym = check_star_symmetry(b.K, b.cb);
    CHECK(sym.pass());
    require_clean(check_cellularity(b.B.ops(), b.K, b.cb, b.hp));
    require_clean(check_jm(b.B.ops(), b.K, b.cb, b.hp));
    auto deg = check_degree_additivity(b.cb, b.hp);
    CHECK(deg.pass());
  }
}

TEST_CASE("expansion of the identity") {
  const Built b(HeckeParams::preset(3, 2));
  const auto c = b.cb.expand(b.B.ops().unit);
  Vec32 back(b.B.dim(), 0);
  for (std::size_t x = 0; x < c.size(); ++x)
    for (int i = 0; i < b.B.dim(); ++i)
      back[i] = static_cast<std::uint32_t>((back[i] + static_cast<std::uint64_t>(c[x]) * b.cb.vectors[x][i]) % b.hp.p);
  CHECK(back == b.B.ops().unit);
  for (int s = 0; s < static_cast<int>(b.cb.shapes.size()); ++s) {
    const int t0 = top_index(b.cb.shapes[s]);
    CHECK(c[b.cb.index(s, t0, t0)] == 1);
  }
}

TEST_CASE("y_k on e(i^lambda) lands in higher shapes; diagonal JM eigenvalue") {
  const Built b(HeckeParams::preset(3, 2));
  const auto theta = theta_zero(2);
  for (int s = 0; s < static_cast<int>(b.cb.shapes.size()); ++s) {
    const auto& cs = b.cb.shapes[s];
    const int t0 = top_index(cs);
    const auto& m = b.cb.vectors[b.cb.index(s, t0, t0)];
    for (int k = 1; k <= b.hp.n; ++k) {
      const auto c = b.cb.expand(b.K.y[k - 1].apply(m));
      for (std::size_t x = 0; x < c.size(); ++x)
        if (c[x]) CHECK(dominance_cmp(b.cb.shapes[b.cb.labels[x][0]].shape, cs.shape, theta) == Cmp::greater);
      const auto d = b.cb.expand(b.K.jm[k - 1].apply(m));
      CHECK(d[b.cb.index(s, t0, t0)] == Fp(b.hp.q, b.hp.p).pow(cs.i_lambda[k - 1]).v);
    }
  }
}

TEST_CASE("y_k e(i^max) = 0 and e(i^max iota) vanishes off the i^lambda") {
  for (auto [n, l] : kCases) {
    if (n > 3) continue;
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const Built b(hp);
    const auto theta = theta_zero(l);
    const auto imax = residue_seq(t_lambda(mu_max(n, l), theta), hp.mc);
    REQUIRE(b.K.e.count(imax));
    for (int k = 1; k <= n; ++k) CHECK(is_zero(evaluate(b.B.ops(), b.K, {tok_y(k), tok_e(imax)})));

    std::set<Residues> tops;
    for (const auto& cs : b.cb.shapes) tops.insert(cs.i_lambda);
    const auto small = residue_seq(t_lambda(mu_max(n - 1, l), theta), hp.mc);
    int killed = 0;
    for (int iota = 0; iota < hp.e(); ++iota) {
      auto j = small;
      j.push_back(iota);
      if (tops.count(j)) continue;
      ++killed;
      CHECK_FALSE(b.K.e.count(j));
    }
    CHECK(killed > 0);
  }
}

TEST_CASE("official word choice only perturbs higher terms") {
  // lambda = ((1),(1),(1)): d(T) = w_0 for the reversed filling, with the two
  // reduced words s1 s2 s1 and s2 s1 s2.
  const auto hp = HeckeParams::preset(3, 3);
  const Built b(hp);
  const auto theta = theta_zero(3);
  const Shape lam{{1}, {1}, {1}};
  int s = -1;
  for (int x = 0; x < static_cast<int>(b.cb.shapes.size()); ++x)
    if (b.cb.shapes[x].shape == lam) s = x;
  REQUIRE(s >= 0);
  const auto& cs = b.cb.shapes[s];
  const Perm w0{2, 1, 0};
  CHECK(official_word(w0) == std::vector<int>{1, 2, 1});
  CHECK(perm_from_word(3, {2, 1, 2}) == w0);
  int checked = 0;
  for (int t = 0; t < static_cast<int>(cs.tabs.size()); ++t) {
    if (d_perm(cs.tabs[t], theta) != w0) continue;
    for (int u = 0; u < static_cast<int>(cs.tabs.size()); ++u) {
      const auto& m = b.cb.vectors[b.cb.index(s, u, t)];
      Word alt;
      for (auto it = cs.words[u].rbegin(); it != cs.words[u].rend(); ++it) alt.push_back(tok_psi(*it));
      alt.push_back(tok_e(cs.i_lambda));
      for (int a : {2, 1, 2}) alt.push_back(tok_psi(a));
      const auto other = evaluate(b.B.ops(), b.K, alt);
      Vec32 diff(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) diff[i] = (other[i] + hp.p - m[i]) % hp.p;
      const auto c = b.cb.expand(diff);
      for (std::size_t x = 0; x < c.size(); ++x) {
        if (!c[x]) continue;
        const auto [bx, ux, vx] = b.cb.labels[x];
        const bool higher_shape = dominance_cmp(b.cb.shapes[bx].shape, lam, theta) == Cmp::greater;
        const bool same = bx == s && (tableau_cmp(cs.tabs[ux], cs.tabs[u], theta) == Cmp::greater ||
                                      tableau_cmp(cs.tabs[vx], cs.tabs[t], theta) == Cmp::greater);
        CHECK((higher_shape || same));
      }
      ++checked;
    }
  }
  CHECK(checked == static_cast<int>(cs.tabs.size()));
}

TEST_CASE("cell modules") {
  for (auto [n, l] : kCases) {
    CAPTURE(n);
    CAPTURE(l);
    const Built b(HeckeParams::preset(n, l));
    const auto mods = cell_modules(b.B.ops(), b.K, b.cb, b.hp);
    long long sq = 0;
    for (const auto& m : mods) {
      sq += static_cast<long long>(m.dim) * m.dim;
      CHECK(m.gram == m.gram.transpose());
      CHECK(m.gram_rank >= 1);
      if (m.shape == mu_max(n, l) && m.dim == 1) CHECK(m.gram(0, 0) != 0);
      // The cell-module action is a representation: psi_r^2 e(i) relations
      // are inherited, so check e(i) acts by orthogonal idempotents.
      FpMat sum(m.dim, m.dim, b.hp.p);
      for (const auto& [name, R] : m.action)
        if (name[0] == 'e') {
          CHECK(R * R == R);
          sum = sum + R;
        }
      CHECK(sum == FpMat::identity(m.dim, b.hp.p));
    }
    CHECK(sq == b.B.dim());
  }
}

TEST_CASE("large e makes every Gram matrix nonsingular") {
  const auto hp = HeckeParams::make(3, 2, 11, 23, {0, 5});
  const Built b(hp);
  for (const auto& m : cell_modules(b.B.ops(), b.K, b.cb, hp)) CHECK(m.gram_rank == m.dim);
}

TEST_CASE("eq13 ideal equals the e2 ideal") {
  for (auto [n, l] : kCases) {
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const BlobAlgebra B(hp);
    const auto KH = build_klr(B.hecke_ops(), hp);
    const auto c = compare_eq13_quotient(B, KH);
    CHECK(c.same_ideal);
    CHECK(c.dim_ideal_e2 == c.dim_ideal_eq13);
    CHECK(c.vanish_e2 == c.vanish_eq13);
    // The surviving e(i) are exactly the one-column residue sequences.
    std::set<Residues> alive;
    for (const auto& [i, E] : KH.e)
      if (!c.vanish_e2.count(i)) alive.insert(i);
    CHECK(alive == c.one_column);
    for (const auto& i : c.direct) CHECK(c.vanish_e2.count(i));
  }
}
