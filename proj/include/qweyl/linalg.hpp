#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qweyl/coefficients.hpp"

namespace qweyl {

/// Dense row-major matrix over an exact field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void add_row(const std::vector<F>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r, c), (*this)(s, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    F inv = inverse(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!is_zero(m(r, k))) m(r, k) = m(r, k) * inv;
    for (std::size_t s = 0; s < m.rows(); ++s) {
      if (s == r || is_zero(m(s, c))) continue;
      F f = m(s, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(r, k))) m(s, k) = m(s, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols());
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!is_zero(m(r, f))) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by Gaussian elimination.
template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  F det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) return F();
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det = det * m(c, c);
    F inv = inverse(m(c, c));
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, c))) continue;
      F f = m(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = m(r, k) - f * m(c, k);
    }
  }
  return det;
}

}  // namespace qweyl
