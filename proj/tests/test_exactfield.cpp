// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "blobcell/field.hpp"
#include "blobcell/matrix.hpp"

using namespace blobcell;

namespace {

Poly poly(std::uint32_t p, std::vector<std::int64_t> c) {
  std::vector<std::uint32_t> v;
  for (auto x : c) v.push_back(Fp(x, p).v);
  return Poly(p, v);
}

RatFun random_ratfun(std::mt19937& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> deg(0, 3), coef(0, static_cast<int>(p) - 1);
  auto rp = [&](bool nonzero) {
    for (;;) {
      std::vector<std::int64_t> c(deg(rng) + 1);
      for (auto& x : c) x = coef(rng);
      Poly q = poly(p, c);
      if (!nonzero || !q.is_zero()) return q;
    }
  };
  return RatFun(rp(false), rp(true));
}

}  // namespace

TEST_CASE("prime field basics") {
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(12));
  const Fp a(7, 11), b(5, 11);
  CHECK((a * b).v == 2);
  CHECK((a / b * b) == a);
  CHECK((a - b - a + b).is_zero());
  CHECK(Fp(-1, 11).v == 10);
  CHECK(Fp(3, 11).pow(-1) * Fp(3, 11) == Fp(1, 11));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(17);
  const std::uint32_t p = 29;
  std::uniform_int_distribution<int> d(0, p - 1);
  for (int it = 0; it < 500; ++it) {
    const Fp a(d(rng), p), b(d(rng), p), c(d(rng), p);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
  for (int it = 0; it < 100; ++it) {
    const RatFun a = random_ratfun(rng, p), b = random_ratfun(rng, p), c = random_ratfun(rng, p);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("root of unity") {
  CHECK(root_of_unity(11, 5) == 3);
  CHECK(order_mod(3, 11) == 5);
  const auto g = root_of_unity(11, 10);
  CHECK(order_mod(g, 11) == 10);
  CHECK(g == 2);
  CHECK_THROWS_AS(root_of_unity(7, 5), NoRoot);
  // Oracle: successive powers.
  for (std::uint32_t p : {11u, 29u, 31u, 41u})
    for (std::uint32_t e = 2; e < p; ++e) {
      if ((p - 1) % e) continue;
      const auto q = root_of_unity(p, e);
      std::uint32_t x = q, k = 1;
      while (x != 1) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * q % p), ++k;
      CHECK(k == e);
    }
}

TEST_CASE("rational function canonical form and specialization") {
  const std::uint32_t p = 11;
  const RatFun f(poly(p, {-1, 0, 1}), poly(p, {-1, 1}));
  CHECK(f == RatFun(poly(p, {1, 1}), Poly::constant(p, 1)));
  CHECK(f.specialize(Fp(3, p)) == Fp(4, p));
  const RatFun pole(Poly::constant(p, 1), poly(p, {-3, 1}));
  CHECK_THROWS_AS(pole.specialize(Fp(3, p)), PoleAtSpecialization);
  CHECK(pole.valuation_at(Fp(3, p)) == -1);
  // The same element built two ways.
  const RatFun x = RatFun::monomial(p, 1, 1);
  const RatFun one = RatFun::constant(p, 1);
  CHECK((x * x - one) / (x - one) == x + one);
  CHECK(RatFun::monomial(p, 2, -2) * x * x == RatFun::constant(p, 2));
  // specialize after lifting a constant is the identity.
  for (int v = 0; v < 11; ++v) CHECK(RatFun::constant(p, v).specialize(Fp(5, p)) == Fp(v, p));
}

TEST_CASE("Laurent polynomials and series") {
  const std::uint32_t p = 11;
  const LaurentPoly a = LaurentPoly::monomial(p, 1, -2) + LaurentPoly::monomial(p, 3, 1);
  CHECK(a.min_degree() == -2);
  CHECK(a.max_degree() == 1);
  CHECK(a.eval(Fp(2, p)) == Fp(2, p).pow(-2) + Fp(6, p));
  // Expansion of q^-1 around q = 3 times the expansion of q is 1.
  const Series s = expand_at(LaurentPoly::monomial(p, 1, -1), Fp(3, p), 6);
  const Series t = expand_at(LaurentPoly::monomial(p, 1, 1), Fp(3, p), 6);
  CHECK(s * t == Series::constant(p, 6, 1));
  CHECK(t.inv() == s);
  Series z(p, 6);
  z.coeff_ref(2) = 5;
  CHECK(z.valuation() == 2);
  CHECK(z.shift_down(2).coeff(0) == 5);
}

TEST_CASE("generic linear algebra") {
  const std::uint32_t p = 11;
  const Fp zero(0, p), one(1, p);
  auto I = Matrix<Fp>::identity(4, zero, one);
  CHECK(rank(I) == 4);

  Matrix<Fp> m(3, 3, zero);
  int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Fp(vals[i][j], p);
  CHECK(rank(m) == 2);
  const std::vector<Fp> b{Fp(1, p), Fp(2, p), Fp(5, p)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);
  CHECK_FALSE(solve(m, {Fp(1, p), Fp(3, p), Fp(0, p)}));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 3);
  for (int it = 0; it < 50; ++it) {
    Matrix<Fp> r(4, 6, zero);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) r(i, j) = Fp(d(rng) == 0 ? 1 : 0, p) * Fp(d(rng), p);
    const auto ns = nullspace(r, one);
    CHECK(rank(r) + static_cast<int>(ns.size()) == 6);
    for (const auto& v : ns) {
      for (const auto& c : r.apply(v)) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("FpMat and echelon space") {
  const std::uint32_t p = 29;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, p - 1);
  FpMat a(5, 5, p);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = d(rng);
  auto inv = a.inverse();
  if (inv) CHECK(a * *inv == FpMat::identity(5, p));
  CHECK(FpMat::from_generic(a.to_generic(), p) == a);
  CHECK(rank(a.to_generic()) == a.rank());

  EchelonSpace s(4, p);
  CHECK(s.insert({1, 2, 0, 0}));
  CHECK(s.insert({0, 1, 1, 0}));
  CHECK_FALSE(s.insert({1, 3, 1, 0}));
  CHECK(s.contains({2, 5, 1, 0}));
  CHECK_FALSE(s.contains({0, 0, 0, 1}));
  std::vector<std::uint32_t> v{3, 0, 0, 7};
  s.reduce(v);
  CHECK(v[0] == 0);
  CHECK(v[1] == 0);
  CHECK(s.dim() == 2);
}
