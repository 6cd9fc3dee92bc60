// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "blobcell/hecke.hpp"

using namespace blobcell;

namespace {

using FVec = std::vector<Fp>;

FVec lift(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  FVec out;
  for (auto x : v) out.emplace_back(x, p);
  return out;
}

FVec random_vec(std::mt19937& rng, int n, std::uint32_t p) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1);
  FVec v;
  for (int i = 0; i < n; ++i) v.emplace_back(d(rng), p);
  return v;
}

}  // namespace

TEST_CASE("parameters") {
  const auto a = HeckeParams::preset(3, 2);
  CHECK(a.e() == 5);
  CHECK(a.p == 11);
  CHECK(a.q == 3);
  CHECK(a.mc.hat_kappa == std::vector<long long>{0, 7});
  const auto b = HeckeParams::preset(3, 3);
  CHECK(b.e() == 7);
  CHECK(b.p == 29);
  CHECK(b.mc.kappa() == std::vector<int>{0, 2, 4});
  try {
    HeckeParams::make(2, 2, 5, 11, {0, 1});
    FAIL("adjacent charges accepted");
  } catch (const InvalidParameters& e) {
    CHECK(std::string(e.what()).find("condition ii") != std::string::npos);
  }
  CHECK_THROWS_AS(HeckeParams::make(2, 2, 4, 11, {0, 2}), InvalidParameters);
  CHECK_THROWS_AS(HeckeParams::make(2, 2, 5, 7, {0, 2}), NoRoot);
  CHECK_THROWS_AS(HeckeParams::make(2, 2, 5, 11, {0, 7}, 2), InvalidParameters);
}

TEST_CASE("normal-form basis") {
  const AKBasis b(3, 2);
  CHECK(b.size() == 48);
  CHECK(b.label(0) == "1");
  for (int idx = 0; idx < b.size(); ++idx) {
    CHECK(b.exps_index(b.exps(b.cidx(idx))) == b.cidx(idx));
    const int w = b.widx(idx);
    CHECK(perm_from_word(3, b.word(w)) == b.perm(w));
    CHECK(static_cast<int>(b.word(w).size()) == b.length(w));
  }
}

TEST_CASE("rank one: L^l reduces by the cyclotomic polynomial") {
  const auto hp = HeckeParams::make(1, 2, 5, 11, {0, 2});
  const auto A = specialized_algebra(hp);
  const Fp q(3, 11), Q1 = Fp(1, 11), Q2 = q * q;
  const auto L2 = A.monomial({2});
  CHECK(L2[0] == -(Q1 * Q2));
  CHECK(L2[1] == Q1 + Q2);
}

TEST_CASE("defining relations hold in the regular representation") {
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    CAPTURE(n);
    CAPTURE(l);
    const auto A = specialized_algebra(hp);
    CHECK(A.dim() == (l == 2 ? 1 << n : (n == 2 ? 9 : 27)) * (n == 2 ? 2 : n == 3 ? 6 : 24));
    const auto bad = check_hecke_relations(A);
    CHECK(bad.empty());
    if (!bad.empty()) MESSAGE(bad.front());
  }
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto G = generic_algebra(HeckeParams::preset(n, l));
    const auto bad = check_hecke_relations(G);
    CHECK(bad.empty());
    if (!bad.empty()) MESSAGE(bad.front());
  }
}

TEST_CASE("multiplication is associative and star reverses products") {
  std::mt19937 rng(11);
  for (auto [n, l] : {std::pair{3, 2}, {2, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    const auto A = specialized_algebra(hp);
    for (int it = 0; it < 5; ++it) {
      const auto a = random_vec(rng, A.dim(), hp.p), b = random_vec(rng, A.dim(), hp.p),
                 c = random_vec(rng, A.dim(), hp.p);
      CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
      CHECK(A.star(A.mul(a, b)) == A.mul(A.star(b), A.star(a)));
      CHECK(A.mul(A.unit(), a) == a);
      CHECK(A.mul(a, A.unit()) == a);
    }
  }
}

TEST_CASE("seminormal model satisfies the relations") {
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(l);
    const SeminormalModel m(HeckeParams::preset(n, l));
    int sq = 0;
    for (const auto& b : m.blocks()) sq += static_cast<int>(b.tabs.size() * b.tabs.size());
    const int fact = n == 2 ? 2 : n == 3 ? 6 : 24;
    int ln = 1;
    for (int i = 0; i < n; ++i) ln *= l;
    CHECK(sq == ln * fact);
    const auto bad = m.check_relations();
    CHECK(bad.empty());
    if (!bad.empty()) MESSAGE(bad.front());
  }
}

TEST_CASE("Murphy idempotents are the seminormal matrix units") {
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const SeminormalModel m(HeckeParams::preset(n, l));
    const RatFun zero(m.params().p), one = RatFun::constant(m.params().p, 1);
    std::vector<Matrix<RatFun>> total;
    for (std::size_t b = 0; b < m.blocks().size(); ++b)
      total.emplace_back(static_cast<int>(m.blocks()[b].tabs.size()), static_cast<int>(m.blocks()[b].tabs.size()), zero);
    for (std::size_t sb = 0; sb < m.blocks().size(); ++sb)
      for (std::size_t si = 0; si < m.blocks()[sb].tabs.size(); ++si) {
        const auto F = m.murphy_idempotent(m.blocks()[sb].tabs[si]);
        for (std::size_t b = 0; b < F.size(); ++b) {
          for (int i = 0; i < F[b].rows(); ++i)
            for (int j = 0; j < F[b].cols(); ++j)
              CHECK(F[b](i, j) == (b == sb && i == j && i == static_cast<int>(si) ? one : zero));
          total[b] = total[b] + F[b];
        }
      }
    for (std::size_t b = 0; b < total.size(); ++b) CHECK(total[b] == m.identity(static_cast<int>(b)));
  }
}

TEST_CASE("regular trace decomposes over the seminormal blocks") {
  std::mt19937 rng(5);
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    const auto G = generic_algebra(hp);
    const SeminormalModel m(hp);
    std::vector<std::vector<int>> words{{}, {1}, {-1}, {-2, -2}, {1, -1}, {-1, -1, -2}};
    std::uniform_int_distribution<int> g(-n, n - 1);
    for (int it = 0; it < 8; ++it) {
      std::vector<int> w;
      for (int k = 0; k < 4; ++k) {
        int x = g(rng);
        w.push_back(x == 0 ? 1 : x);
      }
      words.push_back(w);
    }
    for (const auto& w : words) CHECK(RatFun(regular_trace(G, w)) == seminormal_regular_trace(m, w));
  }
}

TEST_CASE("Murphy idempotents in the generic regular representation") {
  const auto hp = HeckeParams::preset(2, 2);
  const auto A = rational_algebra(hp);
  const auto tabs = all_std_tableaux(2, 2);
  std::vector<RatFun> contents;
  for (const auto& t : tabs)
    for (int k = 1; k <= 2; ++k) contents.push_back(generic_content(t, k, hp));
  auto sum = A.zero();
  for (const auto& s : tabs) {
    auto F = A.unit();
    for (int k = 1; k <= 2; ++k) {
      std::vector<RatFun> seen;
      for (const auto& t : tabs) {
        const RatFun c = generic_content(t, k, hp), cs = generic_content(s, k, hp);
        if (c == cs || std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        auto lf = A.left_L(k, F);
        const RatFun d = (cs - c).inv();
        for (int i = 0; i < A.dim(); ++i) lf[i] = (lf[i] - c * F[i]) * d;
        F = lf;
      }
    }
    CHECK(A.mul(F, F) == F);
    for (int k = 1; k <= 2; ++k) {
      auto lf = A.left_L(k, F);
      for (int i = 0; i < A.dim(); ++i) CHECK(lf[i] == generic_content(s, k, hp) * F[i]);
    }
    for (int i = 0; i < A.dim(); ++i) sum[i] += F[i];
  }
  CHECK(sum == A.unit());
}

TEST_CASE("class idempotents specialize and form a complete orthogonal family") {
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(l);
    const auto hp = HeckeParams::preset(n, l);
    const auto cls = class_idempotents(hp);
    const auto A = specialized_algebra(hp);
    int members = 0;
    auto total = A.zero();
    std::vector<FVec> es;
    for (const auto& c : cls) {
      CHECK(c.pole_order == 0);
      members += static_cast<int>(c.members.size());
      for (const auto& t : c.members) CHECK(residue_seq(t, hp.mc) == c.key);
      const auto e = lift(c.value, hp.p);
      es.push_back(e);
      for (int i = 0; i < A.dim(); ++i) total[i] += e[i];
      // L_k - q^(i_k) is nilpotent on e.
      for (int k = 1; k <= n; ++k) {
        auto v = e;
        const Fp ev = Fp(hp.q, hp.p).pow(c.key[k - 1]);
        for (int it = 0; it < 2 * n; ++it) {
          auto lv = A.left_L(k, v);
          for (int i = 0; i < A.dim(); ++i) lv[i] -= ev * v[i];
          v = lv;
        }
        CHECK(v == A.zero());
      }
    }
    CHECK(members == static_cast<int>(all_std_tableaux(n, l).size()));
    CHECK(total == A.unit());
    if (n * l <= 6)
      for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b) CHECK(A.mul(es[a], es[b]) == (a == b ? es[a] : A.zero()));
  }
}

TEST_CASE("series and rational routes to class idempotents agree") {
  for (auto [n, l] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    const auto a = class_idempotents(hp), b = class_idempotents_rational(hp);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].key == b[i].key);
      CHECK(a[i].members == b[i].members);
      CHECK(a[i].value == b[i].value);
    }
  }
}

TEST_CASE("some class needs cancellation between members") {
  // At least one class has a denominator divisible by t, so integrality is
  // not automatic.
  const auto cls = class_idempotents(HeckeParams::preset(3, 2));
  int worst = 0;
  for (const auto& c : cls) worst = std::max(worst, c.valuation);
  CHECK(worst > 0);
}

TEST_CASE("class idempotents at n = 4, l = 2 are integral") {
  const auto cls = class_idempotents(HeckeParams::preset(4, 2));
  for (const auto& c : cls) CHECK(c.pole_order == 0);
}

TEST_CASE("e2 by specialization and by eigen-conditions") {
  for (int l : {2, 3}) {
    const auto hp = HeckeParams::preset(3, l);
    for (int j = 1; j <= l; ++j) {
      const auto a = e2_by_specialization(hp, j), b = e2_by_linear_system(hp, j);
      CHECK(a == b);
      const auto A = specialized_algebra(hp.with_n(2));
      const auto e = lift(a, hp.p);
      CHECK(A.mul(e, e) == e);
      const auto big = embed_h2(a, AKBasis(3, l));
      int nz = 0;
      for (auto x : big) nz += x != 0;
      CHECK(nz == std::count_if(a.begin(), a.end(), [](auto x) { return x != 0; }));
    }
  }
}

TEST_CASE("e2 idempotents are orthogonal and T1-eigenvectors") {
  for (int l : {2, 3}) {
    const auto hp = HeckeParams::preset(2, l);
    const auto A = specialized_algebra(hp);
    const Fp q(hp.q, hp.p);
    std::vector<FVec> es;
    for (int j = 1; j <= l; ++j) es.push_back(lift(e2_by_specialization(hp, j), hp.p));
    for (int j = 0; j < l; ++j) {
      FVec qe;
      for (const auto& x : es[j]) qe.push_back(x * q);
      CHECK(A.left_T(1, es[j]) == qe);
      CHECK(A.right_T(1, es[j]) == qe);
      for (int k = 0; k < l; ++k) {
        if (j == k) continue;
        CHECK(A.mul(es[j], es[k]) == A.zero());
      }
    }
  }
}

TEST_CASE("L_k eigenvalue multiplicities match the seminormal model") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto hp = HeckeParams::preset(n, l);
    const int dim = AKBasis(n, l).size();
    for (int k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      int total = 0;
      for (const auto& m : jm_eigen_multiplicities(hp, k)) {
        CHECK(m.nullity == m.predicted);
        total += m.nullity;
      }
      CHECK(total == dim);
    }
  }
}
