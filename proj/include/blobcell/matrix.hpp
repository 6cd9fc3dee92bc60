// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The blobcell authors

// Dense matrices over an exact field.  Matrix<S> is generic over the scalar
// (Fp, RatFun); FpMat is a flat uint32 matrix over F_p used for the large
// operator computations.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "blobcell/field.hpp"

namespace blobcell {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const S& zero) : r_(rows), c_(cols), zero_(zero), a_(static_cast<std::size_t>(rows) * cols, zero) {}
  static Matrix identity(int n, const S& zero, const S& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  const S& zero() const { return zero_; }
  S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_, zero_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_, a.zero_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  Matrix scaled(const S& s) const {
    Matrix m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(r_, zero_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  int r_ = 0, c_ = 0;
  S zero_{};
  std::vector<S> a_;
};

// Reduced row echelon form in place; returns the pivot columns.  Pivots are
// chosen as the first nonzero entry scanning rows top-down within each
// column, so the result depends only on the input.
template <class S>
std::vector<int> rref(Matrix<S>& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const S inv = m(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const S f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

template <class S>
int rank(Matrix<S> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of {x : m x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m, const S& one) {
  const auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<S>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<S> v(m.cols(), m.zero());
    v[f] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = b, or nothing when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& m, const std::vector<S>& b) {
  Matrix<S> aug(m.rows(), m.cols() + 1, m.zero());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<S> x(m.cols(), m.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols());
  return x;
}

// ------------------------------------------------------------------ FpMat

class FpMat {
 public:
  FpMat() = default;
  FpMat(int rows, int cols, std::uint32_t p) : r_(rows), c_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}
  static FpMat identity(int n, std::uint32_t p);

  int rows() const { return r_; }
  int cols() const { return c_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  std::uint32_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const std::uint32_t* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * c_; }
  std::uint32_t* row(int i) { return a_.data() + static_cast<std::size_t>(i) * c_; }

  bool is_zero() const;
  FpMat transpose() const;
  FpMat scaled(std::uint32_t s) const;
  FpMat& add_scaled(const FpMat& o, std::uint32_t s);  // this += s * o
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  std::vector<std::uint32_t> column(int j) const;

  friend FpMat operator*(const FpMat& a, const FpMat& b);
  friend FpMat operator+(const FpMat& a, const FpMat& b);
  friend FpMat operator-(const FpMat& a, const FpMat& b);
  friend bool operator==(const FpMat& a, const FpMat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const FpMat& a, const FpMat& b) { return !(a == b); }

  // Inverse of a square matrix, or nothing if singular.
  std::optional<FpMat> inverse() const;
  int rank() const;
  Matrix<Fp> to_generic() const;
  static FpMat from_generic(const Matrix<Fp>& m, std::uint32_t p);

 private:
  int r_ = 0, c_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

// A subspace of F_p^n kept as a reduced echelon basis.  Vectors are
// inserted one at a time; reduce() gives the canonical representative of a
// coset modulo the subspace (all pivot coordinates zero).
class EchelonSpace {
 public:
  EchelonSpace(int dim, std::uint32_t p) : n_(dim), p_(p), pivot_row_(dim, -1) {}
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  std::uint32_t modulus() const { return p_; }
  // Reduces v in place; returns true if v is now zero.
  bool reduce(std::vector<std::uint32_t>& v) const;
  // Adds v if it lies outside the span; returns whether it was added.
  bool insert(std::vector<std::uint32_t> v);
  bool contains(std::vector<std::uint32_t> v) const { return reduce(v); }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

 private:
  int n_;
  std::uint32_t p_;
  std::vector<int> pivot_row_;
  std::vector<int> pivots_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

std::ostream& write_csv(std::ostream& os, const FpMat& m);

}  // namespace blobcell
