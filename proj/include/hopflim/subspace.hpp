#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopflim/matrix.hpp"
#include "hopflim/sparse.hpp"

namespace hopflim {

/// A subspace of k^n held by its reduced row echelon basis. The basis is
/// canonical, so two subspaces are equal iff their basis matrices are.
template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace() = default;

  static Subspace zero(const F& field, std::size_t ambient) { return Subspace(field, ambient, Matrix<F>(field, 0, ambient), {}); }

  static Subspace full(const F& field, std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
    return Subspace(field, ambient, Matrix<F>::identity(field, ambient), std::move(pivots));
  }

  /// Span of the rows of `rows`.
  static Subspace span(const Matrix<F>& rows) {
    auto e = echelon(rows);
    return Subspace(rows.field(), rows.cols(), std::move(e.rows), std::move(e.pivots));
  }

  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    return span(Matrix<F>::from_rows(field, vectors, ambient));
  }

  /// Span of the columns of `cols`.
  static Subspace column_span(const Matrix<F>& cols) { return span(transpose(cols)); }

  /// {v : m v = 0}
  static Subspace kernel(const Matrix<F>& m) {
    auto basis = kernel_basis(m);
    return span(basis);
  }

  /// Kernel of a sparse map; rows that are identically zero are skipped.
  static Subspace kernel(const SparseMatrix<F>& m) { return kernel(compress_rows(m)); }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Basis vectors as columns: the matrix of the inclusion map.
  Matrix<F> inclusion_matrix() const { return transpose(basis_); }

  /// Coordinates of v in the canonical basis, or nullopt if v is not in the
  /// subspace. Because the basis is reduced, the coordinates are read off at
  /// the pivot columns and then verified.
  std::optional<Vector<F>> coordinates(const Vector<F>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::coordinates: wrong ambient dimension");
    Vector<F> coords;
    coords.reserve(dim());
    for (auto p : pivots_) coords.push_back(v[p]);
    for (std::size_t j = 0; j < ambient_; ++j) {
      auto acc = field_.zero();
      for (std::size_t i = 0; i < dim(); ++i)
        if (!field_.is_zero(coords[i]) && !field_.is_zero(basis_(i, j)))
          acc = field_.add(acc, field_.mul(coords[i], basis_(i, j)));
      if (!field_.equal(acc, v[j])) return std::nullopt;
    }
    return coords;
  }

  std::optional<Vector<F>> coordinates(const SparseVec<F>& v) const {
    return coordinates(to_dense(field_, v, ambient_));
  }

  bool contains(const Vector<F>& v) const { return coordinates(v).has_value(); }
  bool contains(const SparseVec<F>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    check_compatible(other, "Subspace::contains");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Matrix whose kernel is exactly this subspace: rows span the annihilator
  /// under the standard pairing.
  Matrix<F> annihilator() const { return kernel_basis(basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_compatible(const Subspace& other, const char* where) const {
    require_same_field(field_, other.field_, where);
    if (ambient_ != other.ambient_) throw DimensionMismatch(std::string(where) + ": ambient dimensions differ");
  }

 private:
  Subspace(F field, std::size_t ambient, Matrix<F> basis, std::vector<std::size_t> pivots)
      : field_(std::move(field)), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  F field_{};
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_compatible(b, "subspace sum");
  return Subspace<F>::span(vstack(a.basis(), b.basis()));
}

/// a n b = ann(ann(a) + ann(b)).
template <Field F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_compatible(b, "intersect");
  return Subspace<F>::kernel(vstack(a.annihilator(), b.annihilator()));
}

/// Image of a subspace under a linear map.
template <Field F>
Subspace<F> image(const Matrix<F>& map, const Subspace<F>& s) {
  if (map.cols() != s.ambient_dim()) throw DimensionMismatch("image: map and subspace do not fit");
  return Subspace<F>::column_span(map * s.inclusion_matrix());
}

}  // namespace hopflim
