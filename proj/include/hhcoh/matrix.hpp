#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hhcoh/field.hpp"

namespace hhcoh {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using T = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const T& x) { return field_.is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(r, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          if (!field_.is_zero(o(k, c))) p(r, c) = field_.add(p(r, c), field_.mul(a, o(k, c)));
      }
    return p;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
    std::vector<T> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!field_.is_zero(v[c]) && !field_.is_zero((*this)(r, c)))
          out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// In-place reduction to reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    auto inv = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || f.is_zero(m(q, c))) continue;
      auto factor = m(q, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!f.is_zero(m(r, k))) m(q, k) = f.sub(m(q, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Basis of the row space in reduced echelon form.
template <class F>
Matrix<F> row_space_basis(Matrix<F> m) {
  auto piv = rref_in_place(m);
  Matrix<F> out(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) out.append_row(m.row(r));
  return out;
}

/// Basis (as rows, reduced echelon form) of {x : m x = 0}.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
  const F& f = m.field();
  auto piv = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  Matrix<F> ker(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(m(r, free));
    ker.append_row(v);
  }
  return row_space_basis(std::move(ker));
}

/// Solve m x = b; free variables are set to zero. nullopt if inconsistent.
template <class F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& m,
                                                         const std::vector<typename F::value_type>& b) {
  const F& f = m.field();
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

/// Pre-factored solver for repeated right-hand sides of m x = b.
template <class F>
class LinearSolver {
 public:
  using T = typename F::value_type;

  explicit LinearSolver(const Matrix<F>& m)
      : field_(m.field()), rows_(m.rows()), cols_(m.cols()), transform_(field_, rows_, rows_) {
    // reduce [m | I] so the row operations can be replayed on any rhs
    Matrix<F> aug(field_, rows_, cols_ + rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = m(r, c);
      aug(r, cols_ + r) = field_.one();
    }
    // pivot only inside the first cols_ columns
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero(aug(p, c))) ++p;
      if (p == rows_) continue;
      aug.swap_rows(p, r);
      auto inv = field_.inv(aug(r, c));
      for (std::size_t k = 0; k < aug.cols(); ++k) aug(r, k) = field_.mul(aug(r, k), inv);
      for (std::size_t q = 0; q < rows_; ++q) {
        if (q == r || field_.is_zero(aug(q, c))) continue;
        auto factor = aug(q, c);
        for (std::size_t k = 0; k < aug.cols(); ++k)
          if (!field_.is_zero(aug(r, k))) aug(q, k) = field_.sub(aug(q, k), field_.mul(factor, aug(r, k)));
      }
      pivots_.push_back(c);
      ++r;
    }
    for (std::size_t q = 0; q < rows_; ++q)
      for (std::size_t k = 0; k < rows_; ++k) transform_(q, k) = aug(q, cols_ + k);
  }

  std::size_t rank() const { return pivots_.size(); }

  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    auto y = transform_.apply(b);
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
      if (!field_.is_zero(y[r])) return std::nullopt;
    std::vector<T> x(cols_, field_.zero());
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
    return x;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<std::size_t> pivots_;
  Matrix<F> transform_;
};

/// Sparse vector with strictly increasing indices and nonzero values.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::value_type>>;

/// Incrementally maintained echelon basis of sparse vectors, keyed by leading index.
template <class F>
class SparseEchelon {
 public:
  using T = typename F::value_type;

  explicit SparseEchelon(F field) : field_(std::move(field)) {}

  /// Reduce v against the basis; returns the residue.
  SparseVec<F> reduce(SparseVec<F> v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      auto factor = v[pos].second;  // basis rows are monic
      v = axpy(v, field_.neg(factor), it->second);
    }
    return v;
  }

  /// Insert v; returns true if it enlarged the span.
  bool insert(SparseVec<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto inv = field_.inv(v.front().second);
    for (auto& [i, x] : v) x = field_.mul(x, inv);
    rows_.emplace(v.front().first, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  SparseVec<F> axpy(const SparseVec<F>& x, const T& a, const SparseVec<F>& y) const {
    SparseVec<F> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, field_.mul(a, y[j].second));
        ++j;
      } else {
        auto v = field_.add(x[i].second, field_.mul(a, y[j].second));
        if (!field_.is_zero(v)) out.emplace_back(x[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  std::map<std::size_t, SparseVec<F>> rows_;
};

}  // namespace hhcoh
