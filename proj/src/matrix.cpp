// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

#include "blobcell/matrix.hpp"

#include <algorithm>

namespace blobcell {

FpMat FpMat::identity(int n, std::uint32_t p) {
  FpMat m(n, n, p);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMat FpMat::transpose() const {
  FpMat t(c_, r_, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMat FpMat::scaled(std::uint32_t s) const {
  FpMat m(*this);
  for (auto& x : m.a_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s % p_);
  return m;
}

FpMat& FpMat::add_scaled(const FpMat& o, std::uint32_t s) {
  for (std::size_t i = 0; i < a_.size(); ++i)
    a_[i] = static_cast<std::uint32_t>((a_[i] + static_cast<std::uint64_t>(o.a_[i]) * s) % p_);
  return *this;
}

std::vector<std::uint32_t> FpMat::apply(const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> out(r_, 0);
  for (int i = 0; i < r_; ++i) {
    const std::uint32_t* ri = row(i);
    std::uint64_t acc = 0;
    for (int j = 0; j < c_; ++j) {
      acc += static_cast<std::uint64_t>(ri[j]) * v[j];
      if ((j & 15) == 15) acc %= p_;
    }
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

std::vector<std::uint32_t> FpMat::column(int j) const {
  std::vector<std::uint32_t> out(r_);
  for (int i = 0; i < r_; ++i) out[i] = (*this)(i, j);
  return out;
}

FpMat operator*(const FpMat& a, const FpMat& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
  FpMat m(a.r_, b.c_, a.p_);
  const std::uint64_t p = a.p_;
  // With p < 2^16 each product is below 2^32 and 2^20 of them fit in a
  // 64-bit accumulator; otherwise reduce after every product.
  const bool small = p < (1u << 16) && a.c_ < (1 << 20);
  std::vector<std::uint64_t> acc(b.c_);
  for (int i = 0; i < a.r_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint32_t* ai = a.row(i);
    for (int k = 0; k < a.c_; ++k) {
      const std::uint64_t x = ai[k];
      if (!x) continue;
      const std::uint32_t* bk = b.row(k);
      if (small) {
        for (int j = 0; j < b.c_; ++j) acc[j] += x * bk[j];
      } else {
        for (int j = 0; j < b.c_; ++j) acc[j] = (acc[j] + x * bk[j]) % p;
      }
    }
    std::uint32_t* mi = m.row(i);
    for (int j = 0; j < b.c_; ++j) mi[j] = static_cast<std::uint32_t>(acc[j] % p);
  }
  return m;
}

FpMat operator+(const FpMat& a, const FpMat& b) {
  FpMat m(a);
  for (std::size_t i = 0; i < m.a_.size(); ++i) {
    const std::uint32_t s = m.a_[i] + b.a_[i];
    m.a_[i] = s >= a.p_ ? s - a.p_ : s;
  }
  return m;
}

FpMat operator-(const FpMat& a, const FpMat& b) {
  FpMat m(a);
  for (std::size_t i = 0; i < m.a_.size(); ++i)
    m.a_[i] = m.a_[i] >= b.a_[i] ? m.a_[i] - b.a_[i] : m.a_[i] + a.p_ - b.a_[i];
  return m;
}

std::optional<FpMat> FpMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = r_;
  FpMat w(*this), inv = identity(n, p_);
  const std::uint64_t p = p_;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (w(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) return std::nullopt;
    if (sel != col) {
      std::swap_ranges(w.row(sel), w.row(sel) + n, w.row(col));
      std::swap_ranges(inv.row(sel), inv.row(sel) + n, inv.row(col));
    }
    const std::uint64_t iv = inv_mod(w(col, col), p_);
    for (int j = 0; j < n; ++j) {
      w(col, j) = static_cast<std::uint32_t>(w(col, j) * iv % p);
      inv(col, j) = static_cast<std::uint32_t>(inv(col, j) * iv % p);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || !w(i, col)) continue;
      const std::uint64_t f = p - w(i, col);
      std::uint32_t* wi = w.row(i);
      std::uint32_t* ii = inv.row(i);
      const std::uint32_t* wc = w.row(col);
      const std::uint32_t* ic = inv.row(col);
      for (int j = 0; j < n; ++j) {
        if (wc[j]) wi[j] = static_cast<std::uint32_t>((wi[j] + f * wc[j]) % p);
        if (ic[j]) ii[j] = static_cast<std::uint32_t>((ii[j] + f * ic[j]) % p);
      }
    }
  }
  return inv;
}

int FpMat::rank() const {
  EchelonSpace s(c_, p_);
  for (int i = 0; i < r_; ++i) s.insert(std::vector<std::uint32_t>(row(i), row(i) + c_));
  return s.dim();
}

Matrix<Fp> FpMat::to_generic() const {
  Matrix<Fp> m(r_, c_, Fp(0, p_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = Fp((*this)(i, j), p_);
  return m;
}

FpMat FpMat::from_generic(const Matrix<Fp>& g, std::uint32_t p) {
  FpMat m(g.rows(), g.cols(), p);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) m(i, j) = g(i, j).v;
  return m;
}

bool EchelonSpace::reduce(std::vector<std::uint32_t>& v) const {
  const std::uint64_t p = p_;
  bool zero = true;
  for (int c = 0; c < n_; ++c) {
    if (!v[c]) continue;
    const int r = pivot_row_[c];
    if (r < 0) {
      zero = false;
      continue;
    }
    // Rows are normalized with pivot 1 and zeros in every other pivot
    // column, so one subtraction clears column c for good.
    const std::uint64_t f = p - v[c];
    const auto& row = rows_[r];
    for (int j = c; j < n_; ++j)
      if (row[j]) v[j] = static_cast<std::uint32_t>((v[j] + f * row[j]) % p);
  }
  return zero;
}

bool EchelonSpace::insert(std::vector<std::uint32_t> v) {
  if (reduce(v)) return false;
  int c = 0;
  while (!v[c]) ++c;
  const std::uint64_t p = p_;
  const std::uint64_t iv = inv_mod(v[c], p_);
  for (int j = c; j < n_; ++j) v[j] = static_cast<std::uint32_t>(v[j] * iv % p);
  // Keep the basis fully reduced: clear column c in the existing rows.
  for (auto& row : rows_) {
    if (!row[c]) continue;
    const std::uint64_t f = p - row[c];
    for (int j = c; j < n_; ++j)
      if (v[j]) row[j] = static_cast<std::uint32_t>((row[j] + f * v[j]) % p);
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

std::ostream& write_csv(std::ostream& os, const FpMat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << "\n";
  }
  return os;
}

}  // namespace blobcell
