#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "hopflim/errors.hpp"
#include "hopflim/field.hpp"

namespace hopflim {

template <Field F>
using Vector = std::vector<typename F::value_type>;

/// Dense exact matrix, row-major. Every entry is interpreted by the one field
/// object the matrix carries.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vector<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("Matrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  /// Builds from (row, col, value) triplets; repeated positions accumulate.
  static Matrix from_triplets(const F& field, std::size_t rows, std::size_t cols,
                              const std::vector<std::tuple<std::size_t, std::size_t, value_type>>& t) {
    Matrix m(field, rows, cols);
    for (const auto& [r, c, v] : t) {
      if (r >= rows || c >= cols) throw DimensionMismatch("Matrix::from_triplets: index out of range");
      m(r, c) = field.add(m(r, c), v);
    }
    return m;
  }

  /// Single column matrix.
  static Matrix column(const F& field, const Vector<F>& v) {
    Matrix m(field, v.size(), 1);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector<F> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  Vector<F> column_vector(std::size_t c) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  /// Nonzero entries as (row, col, value).
  std::vector<std::tuple<std::size_t, std::size_t, value_type>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, value_type>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!field_.is_zero((*this)(r, c))) out.emplace_back(r, c, (*this)(r, c));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a.field(), b.field(), "matrix product");
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  const F& k = a.field();
  Matrix<F> out(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& x = a(i, l);
      if (k.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!k.is_zero(b(l, j))) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
    }
  return out;
}

template <Field F>
Vector<F> operator*(const Matrix<F>& a, const Vector<F>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: sizes differ");
  const F& k = a.field();
  Vector<F> out(a.rows(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!k.is_zero(a(i, j)) && !k.is_zero(x[j])) out[i] = k.add(out[i], k.mul(a(i, j), x[j]));
  return out;
}

namespace detail {
template <Field F, class Op>
Matrix<F> entrywise(const Matrix<F>& a, const Matrix<F>& b, Op op, const char* what) {
  require_same_field(a.field(), b.field(), what);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch(std::string(what) + ": shapes differ");
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = op(a(i, j), b(i, j));
  return out;
}
}  // namespace detail

template <Field F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  return detail::entrywise(a, b, [&](const auto& x, const auto& y) { return a.field().add(x, y); }, "matrix sum");
}

template <Field F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
  return detail::entrywise(a, b, [&](const auto& x, const auto& y) { return a.field().sub(x, y); },
                           "matrix difference");
}

template <Field F>
Matrix<F> scale(const typename F::value_type& s, const Matrix<F>& a) {
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(s, a(i, j));
  return out;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Kronecker product. Tensor bases are ordered row-major everywhere in the
/// library: u_i (x) v_j has index i * dim(V) + j.
template <Field F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a.field(), b.field(), "kron");
  const F& k = a.field();
  Matrix<F> out(k, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (k.is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = k.mul(a(i, j), b(r, c));
    }
  return out;
}

template <Field F>
Vector<F> kron(const Vector<F>& x, const Vector<F>& y, const F& k) {
  Vector<F> out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(k.mul(a, b));
  return out;
}

/// Stacks rows of `top` above rows of `bottom`.
template <Field F>
Matrix<F> vstack(const Matrix<F>& top, const Matrix<F>& bottom) {
  require_same_field(top.field(), bottom.field(), "vstack");
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix<F> out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

/// Result of Gauss-Jordan elimination: the nonzero rows of the reduced row
/// echelon form plus their pivot columns.
template <Field F>
struct Echelon {
  Matrix<F> rows;
  std::vector<std::size_t> pivots;
};

template <Field F>
Echelon<F> echelon(Matrix<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && k.is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    auto inv = k.inv(m(rank, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = k.mul(inv, m(rank, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || k.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!k.is_zero(m(rank, j))) m(i, j) = k.sub(m(i, j), k.mul(factor, m(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  Matrix<F> reduced(k, rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

/// Reduced row echelon form with zero rows removed.
template <Field F>
Matrix<F> rref(const Matrix<F>& m) {
  return echelon(m).rows;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return echelon(m).pivots.size();
}

/// Basis of {v : m v = 0} as the rows of a matrix, in canonical (RREF) form.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  auto [r, pivots] = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return rref(Matrix<F>::from_rows(k, basis, m.cols()));
}

}  // namespace hopflim
