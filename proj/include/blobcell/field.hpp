// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Exact scalars: prime field elements, univariate polynomials over F_p,
// Laurent polynomials, rational functions in one indeterminate and
// truncated power series.  Every type carries its modulus so values can be
// combined without a global context.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blobcell {

class PoleAtSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t k, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
// Multiplicative order of a modulo p (a != 0).
std::uint32_t order_mod(std::uint32_t a, std::uint32_t p);
// Smallest element of exact multiplicative order e in F_p.
std::uint32_t root_of_unity(std::uint32_t p, std::uint32_t e);

struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 2;

  Fp() = default;
  Fp(std::int64_t x, std::uint32_t mod) : p(mod) {
    std::int64_t r = x % static_cast<std::int64_t>(mod);
    if (r < 0) r += mod;
    v = static_cast<std::uint32_t>(r);
  }

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  Fp inv() const;
  Fp pow(std::int64_t k) const;

  Fp operator-() const { return Fp(v == 0 ? 0 : p - v, p); }
  Fp& operator+=(const Fp& o) {
    v += o.v;
    if (v >= p) v -= p;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v = v >= o.v ? v - o.v : v + p - o.v;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * o.v % p);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }

  std::string str() const { return std::to_string(v); }
};

// Dense polynomial over F_p, coefficient i multiplies x^i.  No trailing
// zeros are stored, so the zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::uint32_t p) : p_(p) {}
  Poly(std::uint32_t p, std::vector<std::uint32_t> c);
  static Poly constant(std::uint32_t p, std::int64_t c);
  static Poly monomial(std::uint32_t p, std::int64_t c, int deg);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint32_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  // Multiplicity of x as a factor.
  int low_degree() const;

  Fp eval(const Fp& x) const;
  Poly monic() const;
  Poly scaled(std::uint32_t s) const;
  Poly shifted(int k) const;  // multiply by x^k, k >= 0
  Poly unshifted(int k) const;  // divide by x^k, exact

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);

  std::string str(const char* var = "q") const;

 private:
  void trim();
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

// Laurent polynomial x^shift * body, with body(0) != 0 unless zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::uint32_t p) : body_(p) {}
  LaurentPoly(Poly body, int shift);
  static LaurentPoly constant(std::uint32_t p, std::int64_t c);
  static LaurentPoly monomial(std::uint32_t p, std::int64_t c, int deg);

  std::uint32_t modulus() const { return body_.modulus(); }
  bool is_zero() const { return body_.is_zero(); }
  int shift() const { return shift_; }
  const Poly& body() const { return body_; }
  int min_degree() const { return shift_; }
  int max_degree() const { return shift_ + body_.degree(); }
  Fp eval(const Fp& x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return LaurentPoly(-body_, shift_); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.body_ == b.body_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  Poly body_;
  int shift_ = 0;
};

// Element of F_p(x) in canonical form: gcd(num, den) = 1, den monic.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(std::uint32_t p) : num_(p), den_(Poly::constant(p, 1)) {}
  RatFun(Poly num, Poly den);
  RatFun(const LaurentPoly& l);
  static RatFun constant(std::uint32_t p, std::int64_t c);
  // c * x^deg, deg may be negative.
  static RatFun monomial(std::uint32_t p, std::int64_t c, int deg);

  std::uint32_t modulus() const { return num_.modulus(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  // Value at x = a; throws PoleAtSpecialization if den(a) = 0.
  Fp specialize(const Fp& a) const;
  // Order of vanishing at x = a (negative for poles); zero has INT_MAX.
  int valuation_at(const Fp& a) const;
  RatFun inv() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o) { return *this *= o.inv(); }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const { return RatFun(-num_, den_, true); }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;

 private:
  RatFun(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

// Power series in t truncated at absolute precision prec: an element is
// known modulo t^prec.  Used for integral computations in F_p[[t]].
class Series {
 public:
  Series() = default;
  Series(std::uint32_t p, int prec) : p_(p), c_(prec, 0) {}
  static Series constant(std::uint32_t p, int prec, std::int64_t c);

  std::uint32_t modulus() const { return p_; }
  int precision() const { return static_cast<int>(c_.size()); }
  std::uint32_t coeff(int i) const { return c_[i]; }
  std::uint32_t& coeff_ref(int i) { return c_[i]; }
  bool is_zero() const;
  // Index of the first nonzero coefficient, or precision() if none.
  int valuation() const;
  // Inverse of a unit (constant coefficient nonzero).
  Series inv() const;
  // Divide by t^k where the first k coefficients vanish; the result has
  // precision reduced by k.
  Series shift_down(int k) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  Series operator-() const;
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  std::string str() const;

 private:
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

// Rings wrap the context needed to manufacture constants.  Generic code is
// written against this interface: zero(), one(), from_int(k), and the
// element arithmetic operators.
struct FpRing {
  using Elem = Fp;
  std::uint32_t p;
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(std::int64_t k) const { return Fp(k, p); }
};

struct LaurentRing {
  using Elem = LaurentPoly;
  std::uint32_t p;
  LaurentPoly zero() const { return LaurentPoly(p); }
  LaurentPoly one() const { return LaurentPoly::constant(p, 1); }
  LaurentPoly from_int(std::int64_t k) const { return LaurentPoly::constant(p, k); }
};

struct RatRing {
  using Elem = RatFun;
  std::uint32_t p;
  RatFun zero() const { return RatFun(p); }
  RatFun one() const { return RatFun::constant(p, 1); }
  RatFun from_int(std::int64_t k) const { return RatFun::constant(p, k); }
};

struct SeriesRing {
  using Elem = Series;
  std::uint32_t p;
  int prec;
  Series zero() const { return Series(p, prec); }
  Series one() const { return Series::constant(p, prec, 1); }
  Series from_int(std::int64_t k) const { return Series::constant(p, prec, k); }
};

// Expansion of a Laurent polynomial in x around x = a, written in t = x - a.
Series expand_at(const LaurentPoly& f, const Fp& a, int prec);

}  // namespace blobcell
