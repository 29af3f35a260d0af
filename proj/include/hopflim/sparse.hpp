#pragma once

// Column-sparse linear maps. Structure constants (delta, mult) and every map
// into a tensor power are held here; tensor spaces grow like n^3 and would
// not fit densely.

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopflim/matrix.hpp"

namespace hopflim {

/// Sorted (index, value) pairs with no stored zeros.
template <Field F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::value_type>>;

/// Sums contributions keyed by index, then emits a canonical SparseVec.
template <Field F>
class Accumulator {
 public:
  explicit Accumulator(const F& field) : field_(field) {}

  void add(std::size_t index, const typename F::value_type& v) {
    if (field_.is_zero(v)) return;
    auto [it, inserted] = acc_.try_emplace(index, v);
    if (!inserted) it->second = field_.add(it->second, v);
  }

  SparseVec<F> finish() {
    SparseVec<F> out;
    out.reserve(acc_.size());
    for (auto& [i, v] : acc_)
      if (!field_.is_zero(v)) out.emplace_back(i, std::move(v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    acc_.clear();
    return out;
  }

 private:
  const F& field_;
  std::unordered_map<std::size_t, typename F::value_type> acc_;
};

template <Field F>
SparseVec<F> to_sparse(const F& k, const Vector<F>& v) {
  SparseVec<F> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!k.is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <Field F>
Vector<F> to_dense(const F& k, const SparseVec<F>& v, std::size_t n) {
  Vector<F> out(n, k.zero());
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

template <Field F>
SparseVec<F> combine(const F& k, const SparseVec<F>& a, const typename F::value_type& s,
                     const SparseVec<F>& b) {
  // a + s * b
  SparseVec<F> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto v = k.mul(s, b[j].second);
      if (!k.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      auto v = k.add(a[i].second, k.mul(s, b[j].second));
      if (!k.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <Field F>
class SparseMatrix {
 public:
  using value_type = typename F::value_type;

  SparseMatrix() = default;
  SparseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(const F& field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, field.one());
    return m;
  }

  static SparseMatrix from_dense(const Matrix<F>& d) {
    SparseMatrix m(d.field(), d.rows(), d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (std::size_t r = 0; r < d.rows(); ++r)
        if (!d.field().is_zero(d(r, c))) m.columns_[c].emplace_back(r, d(r, c));
    return m;
  }

  static SparseMatrix from_columns(const F& field, std::size_t rows, std::vector<SparseVec<F>> cols) {
    SparseMatrix m(field, rows, cols.size());
    for (const auto& col : cols)
      for (const auto& e : col)
        if (e.first >= rows) throw DimensionMismatch("SparseMatrix::from_columns: row index out of range");
    m.columns_ = std::move(cols);
    return m;
  }

  /// Repeated positions accumulate.
  static SparseMatrix from_triplets(const F& field, std::size_t rows, std::size_t cols,
                                    const std::vector<std::tuple<std::size_t, std::size_t, value_type>>& t) {
    std::vector<Accumulator<F>> acc(cols, Accumulator<F>(field));
    for (const auto& [r, c, v] : t) {
      if (r >= rows || c >= cols) throw DimensionMismatch("SparseMatrix::from_triplets: index out of range");
      acc[c].add(r, v);
    }
    SparseMatrix m(field, rows, cols);
    for (std::size_t c = 0; c < cols; ++c) m.columns_[c] = acc[c].finish();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec<F>& column(std::size_t c) const { return columns_[c]; }
  const std::vector<SparseVec<F>>& columns() const { return columns_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  value_type at(std::size_t r, std::size_t c) const {
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t i) { return e.first < i; });
    return (it != col.end() && it->first == r) ? it->second : field_.zero();
  }

  Matrix<F> to_dense() const {
    Matrix<F> d(field_, rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) d(r, c) = v;
    return d;
  }

  std::vector<std::tuple<std::size_t, std::size_t, value_type>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, value_type>> out;
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) out.emplace_back(r, c, v);
    return out;
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    Accumulator<F> acc(field_);
    for (const auto& [j, xj] : x)
      for (const auto& [i, a] : columns_[j]) acc.add(i, field_.mul(a, xj));
    return acc.finish();
  }

  /// Applies id_left (x) this (x) id_right to a vector of the tensor space
  /// left (x) cols (x) right.
  SparseVec<F> apply_on_factor(const SparseVec<F>& x, std::size_t left, std::size_t right) const {
    Accumulator<F> acc(field_);
    for (const auto& [idx, v] : x) {
      std::size_t r = idx % right;
      std::size_t mid = (idx / right) % cols_;
      std::size_t l = idx / right / cols_;
      if (l >= left) throw DimensionMismatch("apply_on_factor: vector index outside tensor space");
      for (const auto& [i, a] : columns_[mid]) acc.add((l * rows_ + i) * right + r, field_.mul(a, v));
    }
    return acc.finish();
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec<F>> columns_;
};

/// a * b
template <Field F>
SparseMatrix<F> compose(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_same_field(a.field(), b.field(), "compose");
  if (a.cols() != b.rows()) throw DimensionMismatch("compose: inner dimensions differ");
  std::vector<SparseVec<F>> cols;
  cols.reserve(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(a.apply(b.column(j)));
  return SparseMatrix<F>::from_columns(a.field(), a.rows(), std::move(cols));
}

/// (a (x) b) applied to a vector of cols(a) (x) cols(b).
template <Field F>
SparseVec<F> tensor_apply(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const SparseVec<F>& x) {
  return a.apply_on_factor(b.apply_on_factor(x, a.cols(), 1), 1, b.rows());
}

/// (a (x) b) * m without materializing the Kronecker product.
template <Field F>
SparseMatrix<F> tensor_compose(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const SparseMatrix<F>& m) {
  require_same_field(a.field(), b.field(), "tensor_compose");
  require_same_field(a.field(), m.field(), "tensor_compose");
  if (a.cols() * b.cols() != m.rows()) throw DimensionMismatch("tensor_compose: shapes differ");
  std::vector<SparseVec<F>> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(tensor_apply(a, b, m.column(j)));
  return SparseMatrix<F>::from_columns(a.field(), a.rows() * b.rows(), std::move(cols));
}

/// (id_left (x) a (x) id_right) * m
template <Field F>
SparseMatrix<F> compose_on_factor(const SparseMatrix<F>& a, std::size_t left, std::size_t right,
                                  const SparseMatrix<F>& m) {
  if (left * a.cols() * right != m.rows()) throw DimensionMismatch("compose_on_factor: shapes differ");
  std::vector<SparseVec<F>> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(a.apply_on_factor(m.column(j), left, right));
  return SparseMatrix<F>::from_columns(a.field(), left * a.rows() * right, std::move(cols));
}

template <Field F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_same_field(a.field(), b.field(), "kron");
  const F& k = a.field();
  std::vector<SparseVec<F>> cols;
  cols.reserve(a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseVec<F> col;
      for (const auto& [r, x] : a.column(i))
        for (const auto& [s, y] : b.column(j)) col.emplace_back(r * b.rows() + s, k.mul(x, y));
      cols.push_back(std::move(col));
    }
  return SparseMatrix<F>::from_columns(k, a.rows() * b.rows(), std::move(cols));
}

/// Flip U (x) V -> V (x) U for dim U = n, dim V = m.
template <Field F>
SparseMatrix<F> flip(const F& k, std::size_t n, std::size_t m) {
  std::vector<SparseVec<F>> cols(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cols[i * m + j].emplace_back(j * n + i, k.one());
  return SparseMatrix<F>::from_columns(k, n * m, std::move(cols));
}

template <Field F>
SparseMatrix<F> operator-(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_same_field(a.field(), b.field(), "sparse difference");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sparse difference: shapes differ");
  std::vector<SparseVec<F>> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    cols.push_back(combine(a.field(), a.column(j), a.field().neg(a.field().one()), b.column(j)));
  return SparseMatrix<F>::from_columns(a.field(), a.rows(), std::move(cols));
}

template <Field F>
SparseMatrix<F> operator+(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_same_field(a.field(), b.field(), "sparse sum");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sparse sum: shapes differ");
  std::vector<SparseVec<F>> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(combine(a.field(), a.column(j), a.field().one(), b.column(j)));
  return SparseMatrix<F>::from_columns(a.field(), a.rows(), std::move(cols));
}

/// Restriction to the rows that carry a nonzero entry. Kernels are unchanged
/// by dropping zero rows, so this is what feeds dense elimination.
template <Field F>
Matrix<F> compress_rows(const SparseMatrix<F>& m) {
  std::vector<std::size_t> used;
  for (const auto& col : m.columns())
    for (const auto& e : col) used.push_back(e.first);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  Matrix<F> d(m.field(), used.size(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      auto pos = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
      d(pos, c) = v;
    }
  return d;
}

}  // namespace hopflim
