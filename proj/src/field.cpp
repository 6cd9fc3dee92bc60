// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/field.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <tuple>
#include <utility>

namespace blobcell {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair(nt, t - q * nt);
    std::tie(r, nr) = std::pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t order_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t x = a;
  std::uint32_t k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

std::uint32_t root_of_unity(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw NoRoot(std::to_string(p) + " is not prime");
  if (e < 2 || (p - 1) % e != 0)
    throw NoRoot("no element of order " + std::to_string(e) + " in F_" + std::to_string(p));
  for (std::uint32_t a = 2; a < p; ++a)
    if (order_mod(a, p) == e) return a;
  throw NoRoot("no element of order " + std::to_string(e));
}

Fp Fp::inv() const { return Fp(inv_mod(v, p), p); }

Fp Fp::pow(std::int64_t k) const {
  if (k < 0) return inv().pow(-k);
  return Fp(pow_mod(v, static_cast<std::uint64_t>(k), p), p);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> c) : p_(p), c_(std::move(c)) {
  for (auto& x : c_) x %= p_;
  trim();
}

Poly Poly::constant(std::uint32_t p, std::int64_t c) { return monomial(p, c, 0); }

Poly Poly::monomial(std::uint32_t p, std::int64_t c, int deg) {
  Poly r(p);
  Fp v(c, p);
  if (v.is_zero()) return r;
  r.c_.assign(deg + 1, 0);
  r.c_[deg] = v.v;
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return INT_MAX;
}

Fp Poly::eval(const Fp& x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x.v + c_[i]) % p_;
  return Fp(static_cast<std::int64_t>(acc), p_);
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(lead(), p_));
}

Poly Poly::scaled(std::uint32_t s) const {
  Poly r(*this);
  for (auto& x : r.c_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s % p_);
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::unshifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r(p_);
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p_ ? s - p_ : s;
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p_ - o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = x ? p_ - x : 0;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.p_);
  if (a.c_.empty() || b.c_.empty()) return r;
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    const std::uint64_t ai = a.c_[i];
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + ai * b.c_[j]) % p;
  }
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint32_t p = a.p_;
  r = a;
  q = Poly(p);
  if (a.degree() < b.degree()) return;
  q.c_.assign(a.degree() - b.degree() + 1, 0);
  const std::uint64_t li = inv_mod(b.lead(), p);
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    const std::uint32_t top = r.coeff(d);
    if (!top) continue;
    const std::uint64_t f = top * li % p;
    q.c_[d - db] = static_cast<std::uint32_t>(f);
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t sub = f * b.c_[j] % p;
      std::uint32_t& t = r.c_[d - db + j];
      t = static_cast<std::uint32_t>((t + p - sub) % p);
    }
  }
  q.trim();
  r.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Poly body, int shift) : body_(std::move(body)), shift_(shift) { normalize(); }

LaurentPoly LaurentPoly::constant(std::uint32_t p, std::int64_t c) { return monomial(p, c, 0); }

LaurentPoly LaurentPoly::monomial(std::uint32_t p, std::int64_t c, int deg) {
  return LaurentPoly(Poly::constant(p, c), deg);
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    shift_ = 0;
    return;
  }
  const int k = body_.low_degree();
  if (k > 0) {
    body_ = body_.unshifted(k);
    shift_ += k;
  }
}

Fp LaurentPoly::eval(const Fp& x) const { return body_.eval(x) * x.pow(shift_); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  body_ = body_.shifted(shift_ - s) + o.body_.shifted(o.shift_ - s);
  shift_ = s;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  body_ = body_ * o.body_;
  shift_ += o.shift_;
  normalize();
  return *this;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  if (shift_ == 0) return body_.str();
  return "q^" + std::to_string(shift_) + "*(" + body_.str() + ")";
}

// -------------------------------------------------------------- RatFun

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFun::RatFun(const LaurentPoly& l) {
  const std::uint32_t p = l.modulus();
  if (l.shift() >= 0) {
    num_ = l.body().shifted(l.shift());
    den_ = Poly::constant(p, 1);
  } else {
    num_ = l.body();
    den_ = Poly::monomial(p, 1, -l.shift());
  }
  normalize();
}

RatFun RatFun::constant(std::uint32_t p, std::int64_t c) {
  return RatFun(Poly::constant(p, c), Poly::constant(p, 1), true);
}

RatFun RatFun::monomial(std::uint32_t p, std::int64_t c, int deg) {
  if (deg >= 0) return RatFun(Poly::monomial(p, c, deg), Poly::constant(p, 1));
  return RatFun(Poly::constant(p, c), Poly::monomial(p, 1, -deg));
}

void RatFun::normalize() {
  const std::uint32_t p = den_.modulus();
  if (num_.is_zero()) {
    den_ = Poly::constant(p, 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  const std::uint32_t li = inv_mod(den_.lead(), p);
  num_ = num_.scaled(li);
  den_ = den_.scaled(li);
}

bool RatFun::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }

Fp RatFun::specialize(const Fp& a) const {
  const Fp d = den_.eval(a);
  if (d.is_zero())
    throw PoleAtSpecialization("pole of " + str() + " at " + std::to_string(a.v));
  return num_.eval(a) / d;
}

int RatFun::valuation_at(const Fp& a) const {
  if (num_.is_zero()) return INT_MAX;
  const Poly lin(a.p, {static_cast<std::uint32_t>((a.p - a.v) % a.p), 1});
  auto mult = [&](Poly f) {
    int k = 0;
    for (;;) {
      Poly q, r;
      Poly::divmod(f, lin, q, r);
      if (!r.is_zero()) return k;
      f = q;
      ++k;
    }
  };
  return mult(num_) - mult(den_);
}

RatFun RatFun::inv() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFun(modulus());
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

std::string RatFun::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// -------------------------------------------------------------- Series

Series Series::constant(std::uint32_t p, int prec, std::int64_t c) {
  Series s(p, prec);
  if (prec > 0) s.c_[0] = Fp(c, p).v;
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

int Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return precision();
}

Series Series::inv() const {
  if (c_.empty() || c_[0] == 0) throw std::domain_error("series is not a unit");
  const int n = precision();
  Series r(p_, n);
  const std::uint64_t i0 = inv_mod(c_[0], p_);
  r.c_[0] = static_cast<std::uint32_t>(i0);
  for (int k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (int j = 1; j <= k; ++j) acc = (acc + static_cast<std::uint64_t>(c_[j]) * r.c_[k - j]) % p_;
    r.c_[k] = static_cast<std::uint32_t>((p_ - acc) % p_ * i0 % p_);
  }
  return r;
}

Series Series::shift_down(int k) const {
  for (int i = 0; i < k; ++i)
    if (c_[i]) throw std::domain_error("shift_down would discard a nonzero coefficient");
  Series r(p_, precision() - k);
  for (int i = k; i < precision(); ++i) r.c_[i - k] = c_[i];
  return r;
}

Series& Series::operator+=(const Series& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p_ ? s - p_ : s;
  }
  return *this;
}

Series& Series::operator-=(const Series& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p_ - o.c_[i];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j] % p_;
  }
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return *this;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& x : r.c_) x = x ? p_ - x : 0;
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "] + O(t^" << c_.size() << ")";
  return os.str();
}

Series expand_at(const LaurentPoly& f, const Fp& a, int prec) {
  // x = a + t; x^k = sum binom(k, j) a^(k-j) t^j for k >= 0, and
  // x^-1 = a^-1 (1 + t/a)^-1 as a series.
  const std::uint32_t p = f.modulus();
  Series x(p, prec);
  x.coeff_ref(0) = a.v;
  if (prec > 1) x.coeff_ref(1) = 1 % p;
  Series base = f.shift() >= 0 ? x : x.inv();
  int e = f.shift() >= 0 ? f.shift() : -f.shift();
  Series pw = Series::constant(p, prec, 1);
  Series b = base;
  while (e) {
    if (e & 1) pw *= b;
    b *= b;
    e >>= 1;
  }
  // Horner for the body in x.
  Series acc(p, prec);
  const auto& c = f.body().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += Series::constant(p, prec, c[i]);
  }
  return acc * pw;
}

}  // namespace blobcell
