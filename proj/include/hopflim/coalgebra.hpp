#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hopflim/sparse.hpp"
#include "hopflim/subspace.hpp"

namespace hopflim {

/// Outcome of an axiom or morphism check: the first violated identity and
/// the basis element on which it fails.
struct Report {
  bool pass = true;
  std::string identity;
  std::optional<std::size_t> basis_index;

  static Report ok() { return {}; }
  static Report fail(std::string identity, std::optional<std::size_t> index = std::nullopt) {
    return {false, std::move(identity), index};
  }
  explicit operator bool() const { return pass; }

  std::string message() const {
    if (pass) return "pass";
    std::string m = "violates " + identity;
    if (basis_index) m += " at basis index " + std::to_string(*basis_index);
    return m;
  }
};

namespace detail {

/// Index of the first column where two equally shaped maps differ.
template <Field F>
std::optional<std::size_t> first_difference(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.column(j) != b.column(j)) return j;
  return std::nullopt;
}

template <Field F>
SparseMatrix<F> row_map(const F& k, const Vector<F>& row) {
  std::vector<SparseVec<F>> cols(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!k.is_zero(row[j])) cols[j].emplace_back(0, row[j]);
  return SparseMatrix<F>::from_columns(k, 1, std::move(cols));
}

/// True iff flip o delta = delta, checked column by column.
template <Field F>
bool flip_invariant(const SparseMatrix<F>& delta, std::size_t n) {
  for (const auto& col : delta.columns()) {
    SparseVec<F> flipped;
    flipped.reserve(col.size());
    for (const auto& [idx, v] : col) flipped.emplace_back((idx % n) * n + idx / n, v);
    std::sort(flipped.begin(), flipped.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (flipped != col) return false;
  }
  return true;
}

template <Field F>
SparseMatrix<F> column_map(const F& k, const Vector<F>& col) {
  return SparseMatrix<F>::from_columns(k, col.size(), {to_sparse(k, col)});
}

}  // namespace detail

/// Checks coassociativity and both counit identities of (delta, counit).
/// Shape problems raise MalformedInput; axiom failures are reported.
template <Field F>
Report check_coalgebra_data(std::size_t dim, const SparseMatrix<F>& delta, const Vector<F>& counit) {
  if (delta.rows() != dim * dim || delta.cols() != dim)
    throw MalformedInput("delta must be " + std::to_string(dim * dim) + " x " + std::to_string(dim));
  if (counit.size() != dim) throw MalformedInput("epsilon must have length " + std::to_string(dim));
  const F& k = delta.field();
  auto id = SparseMatrix<F>::identity(k, dim);
  auto eps = detail::row_map(k, counit);

  auto left = compose_on_factor(delta, 1, dim, delta);   // (delta (x) id) delta
  auto right = compose_on_factor(delta, dim, 1, delta);  // (id (x) delta) delta
  if (auto j = detail::first_difference(left, right)) return Report::fail("coassociativity", j);

  if (auto j = detail::first_difference(compose_on_factor(eps, 1, dim, delta), id)) return Report::fail("left counit", j);
  if (auto j = detail::first_difference(compose_on_factor(eps, dim, 1, delta), id)) return Report::fail("right counit", j);
  return Report::ok();
}

/// A finite-dimensional coalgebra given by structure constants on a fixed
/// basis e_0..e_{n-1}. Column i of `delta` holds the coordinates of
/// delta(e_i) in the basis e_j (x) e_k (index j * n + k).
///
/// Instances are immutable handles; copies share the same data. Axioms are
/// checked once at construction and the verdict is cached; operations that
/// need a genuine coalgebra call require_verified().
template <Field F>
class Coalgebra {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Coalgebra() = default;

  static Coalgebra make(std::string name, SparseMatrix<F> delta, Vector<F> counit) {
    auto d = std::make_shared<Data>();
    d->dim = counit.size();
    d->report = check_coalgebra_data(d->dim, delta, counit);
    d->name = std::move(name);
    d->field = delta.field();
    d->cocommutative = detail::flip_invariant(delta, d->dim);
    d->delta = std::move(delta);
    d->counit = std::move(counit);
    Coalgebra c;
    c.d_ = std::move(d);
    return c;
  }

  /// The one-dimensional coalgebra k: delta(1) = 1 (x) 1, epsilon(1) = 1.
  static Coalgebra trivial(const F& k, std::string name = "k") {
    return make(std::move(name), SparseMatrix<F>::identity(k, 1), Vector<F>{k.one()});
  }

  /// The zero coalgebra.
  static Coalgebra null(const F& k, std::string name = "0") {
    return make(std::move(name), SparseMatrix<F>(k, 0, 0), Vector<F>{});
  }

  const std::string& name() const { return d_->name; }
  const F& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const SparseMatrix<F>& delta() const { return d_->delta; }
  const Vector<F>& counit() const { return d_->counit; }
  SparseMatrix<F> counit_map() const { return detail::row_map(field(), counit()); }
  const Report& axiom_report() const { return d_->report; }
  bool verified() const { return d_->report.pass; }
  bool cocommutative() const { return d_->cocommutative; }
  bool same_object(const Coalgebra& other) const { return d_ == other.d_; }

  void require_verified(const char* where) const {
    if (!verified())
      throw AxiomError(std::string(where) + ": '" + name() + "' is not a coalgebra (" + d_->report.message() + ")");
  }

  Coalgebra renamed(std::string name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    Coalgebra c;
    c.d_ = std::move(d);
    return c;
  }

  SparseVec<F> apply_delta(const Vector<F>& v) const { return d_->delta.apply(to_sparse(field(), v)); }

  value_type apply_counit(const Vector<F>& v) const {
    auto acc = field().zero();
    for (std::size_t i = 0; i < dim(); ++i) acc = field().add(acc, field().mul(counit()[i], v[i]));
    return acc;
  }

  /// Structural equality (names are ignored).
  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.d_ == b.d_ || (a.field() == b.field() && a.dim() == b.dim() && a.delta() == b.delta() &&
                            a.counit() == b.counit());
  }

 private:
  struct Data {
    std::string name;
    F field{};
    std::size_t dim = 0;
    SparseMatrix<F> delta;
    Vector<F> counit;
    Report report;
    bool cocommutative = false;
  };
  std::shared_ptr<const Data> d_;
};

template <Field F>
Report check_coalgebra(const Coalgebra<F>& c) {
  return c.axiom_report();
}

enum class Certificate { linear_only = 0, coalgebra = 1, bialgebra = 2, hopf = 3 };

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::linear_only: return "linear";
    case Certificate::coalgebra: return "coalgebra";
    case Certificate::bialgebra: return "bialgebra";
    case Certificate::hopf: return "hopf";
  }
  return "?";
}

inline bool at_least(Certificate have, Certificate need) { return static_cast<int>(have) >= static_cast<int>(need); }

/// A linear map between two structures of type Obj (Coalgebra, Bialgebra or
/// HopfAlgebra). `matrix` is cod.dim() x dom.dim(). The certificate records
/// the strongest level at which the map has been verified.
template <class Obj>
struct Morphism {
  using object_type = Obj;
  using field_type = typename Obj::field_type;

  Obj dom;
  Obj cod;
  Matrix<field_type> matrix;
  Certificate certificate = Certificate::linear_only;
};

template <class Obj>
Morphism<Obj> make_morphism(Obj dom, Obj cod, Matrix<typename Obj::field_type> m) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw DimensionMismatch("morphism matrix must be " + std::to_string(cod.dim()) + " x " + std::to_string(dom.dim()));
  require_same_field(dom.field(), cod.field(), "morphism");
  require_same_field(dom.field(), m.field(), "morphism");
  return {std::move(dom), std::move(cod), std::move(m), Certificate::linear_only};
}

/// delta_cod f = (f (x) f) delta_dom and eps_cod f = eps_dom.
template <Field F>
Report check_coalgebra_map(const Coalgebra<F>& dom, const Coalgebra<F>& cod, const Matrix<F>& f) {
  if (f.rows() != cod.dim() || f.cols() != dom.dim()) throw DimensionMismatch("check_coalgebra_map: shape mismatch");
  require_same_field(dom.field(), cod.field(), "check_coalgebra_map");
  auto fs = SparseMatrix<F>::from_dense(f);
  if (auto j = detail::first_difference(compose(cod.delta(), fs), tensor_compose(fs, fs, dom.delta())))
    return Report::fail("comultiplicativity", j);
  if (auto j = detail::first_difference(compose(cod.counit_map(), fs), dom.counit_map()))
    return Report::fail("counit preservation", j);
  return Report::ok();
}

/// Upgrades the certificate to `coalgebra` when both identities hold.
template <Field F>
Report check_morphism(Morphism<Coalgebra<F>>& f) {
  auto r = check_coalgebra_map(f.dom, f.cod, f.matrix);
  if (r.pass && !at_least(f.certificate, Certificate::coalgebra)) f.certificate = Certificate::coalgebra;
  return r;
}

/// Matrix of delta^(k-1): C -> C^(x)k. k = 1 is the identity.
template <Field F>
SparseMatrix<F> iterated_delta(const Coalgebra<F>& c, std::size_t k) {
  if (k == 0) throw PreconditionError("iterated_delta: order must be at least 1");
  c.require_verified("iterated_delta");
  auto result = SparseMatrix<F>::identity(c.field(), c.dim());
  std::size_t left = 1;
  for (std::size_t j = 1; j < k; ++j) {
    result = compose_on_factor(c.delta(), left, 1, result);
    left *= c.dim();
  }
  return result;
}

template <Field F>
bool is_cocommutative(const Coalgebra<F>& c) {
  return c.cocommutative();
}

/// A subcoalgebra together with its restricted structure and the inclusion.
/// The restricted coalgebra uses the RREF basis of the carrier.
template <Field F>
struct Subcoalgebra {
  Coalgebra<F> parent;
  Subspace<F> carrier;
  Coalgebra<F> restricted;
  Morphism<Coalgebra<F>> inclusion;
  std::size_t iterations = 0;  // passes of the fixed-point loop
};

namespace detail {

/// Coordinates of x in carrier (x) carrier, read off at pivot pairs and then
/// verified by reconstruction; nullopt if x is outside.
template <Field F>
std::optional<SparseVec<F>> tensor_square_coordinates(const Subspace<F>& s, const SparseVec<F>& x) {
  const F& k = s.field();
  const std::size_t n = s.ambient_dim(), d = s.dim();
  const auto& piv = s.pivots();
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < d; ++i) slot[piv[i]] = static_cast<std::ptrdiff_t>(i);
  SparseVec<F> coords;
  for (const auto& [idx, v] : x) {
    auto a = slot[idx / n], b = slot[idx % n];
    if (a >= 0 && b >= 0) coords.emplace_back(static_cast<std::size_t>(a) * d + static_cast<std::size_t>(b), v);
  }
  std::sort(coords.begin(), coords.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  Accumulator<F> acc(k);
  for (const auto& [idx, v] : coords) {
    auto row_a = s.basis().row(idx / d), row_b = s.basis().row(idx % d);
    for (std::size_t p = 0; p < n; ++p) {
      if (k.is_zero(row_a[p])) continue;
      auto av = k.mul(v, row_a[p]);
      for (std::size_t q = 0; q < n; ++q)
        if (!k.is_zero(row_b[q])) acc.add(p * n + q, k.mul(av, row_b[q]));
    }
  }
  if (acc.finish() != x) return std::nullopt;
  return coords;
}

}  // namespace detail

/// Structure constants of C restricted to `carrier`, or nullopt when
/// delta(carrier) is not inside carrier (x) carrier.
template <Field F>
std::optional<Coalgebra<F>> restrict_coalgebra(const Coalgebra<F>& c, const Subspace<F>& carrier, std::string name) {
  const F& k = c.field();
  const std::size_t d = carrier.dim();
  std::vector<SparseVec<F>> cols;
  Vector<F> counit;
  for (std::size_t i = 0; i < d; ++i) {
    auto b = carrier.basis_vector(i);
    auto coords = detail::tensor_square_coordinates(carrier, c.apply_delta(b));
    if (!coords) return std::nullopt;
    cols.push_back(std::move(*coords));
    counit.push_back(c.apply_counit(b));
  }
  return Coalgebra<F>::make(std::move(name), SparseMatrix<F>::from_columns(k, d * d, std::move(cols)), std::move(counit));
}

/// Wraps an already-known subcoalgebra carrier. Throws
/// InternalConsistencyError if the carrier is not closed under delta.
template <Field F>
Subcoalgebra<F> make_subcoalgebra(const Coalgebra<F>& c, const Subspace<F>& carrier, std::size_t iterations = 0) {
  auto restricted = restrict_coalgebra(c, carrier, c.name() + "|sub");
  if (!restricted) throw InternalConsistencyError("carrier of '" + c.name() + "' is not a subcoalgebra");
  Morphism<Coalgebra<F>> inc{*restricted, c, carrier.inclusion_matrix(), Certificate::linear_only};
  if (!check_morphism(inc)) throw InternalConsistencyError("subcoalgebra inclusion is not a coalgebra map");
  return {c, carrier, std::move(*restricted), std::move(inc), iterations};
}

/// The largest subcoalgebra of C inside W (equivalently the sum of all
/// subcoalgebras contained in W), as the fixed point of
///   W_0 = W,  W_{t+1} = { c in W_t : delta(c) in W_t (x) W_t }.
/// Each pass is one kernel computation in coordinates of W_t; the dimension
/// drops on every pass but the last, so at most dim(W) + 1 passes run.
template <Field F>
Subcoalgebra<F> largest_subcoalgebra(const Coalgebra<F>& c, const Subspace<F>& w) {
  c.require_verified("largest_subcoalgebra");
  require_same_field(c.field(), w.field(), "largest_subcoalgebra");
  if (w.ambient_dim() != c.dim()) throw DimensionMismatch("largest_subcoalgebra: subspace lives in the wrong space");
  const F& k = c.field();
  const std::size_t n = c.dim();
  Subspace<F> current = w;
  std::size_t passes = 0;
  while (true) {
    ++passes;
    if (passes > w.dim() + 1) throw InternalConsistencyError("largest_subcoalgebra did not reach a fixed point");
    if (current.is_zero()) break;
    // delta(c) lies in W (x) W iff (A (x) id) delta(c) = 0 and (id (x) A) delta(c) = 0
    // where ker A = W.
    auto ann = SparseMatrix<F>::from_dense(current.annihilator());
    const std::size_t r = ann.rows();
    std::vector<SparseVec<F>> cols;
    for (std::size_t i = 0; i < current.dim(); ++i) {
      auto dv = c.apply_delta(current.basis_vector(i));
      auto left = ann.apply_on_factor(dv, 1, n);
      auto right = ann.apply_on_factor(dv, n, 1);
      for (auto& e : right) e.first += r * n;
      left.insert(left.end(), right.begin(), right.end());
      cols.push_back(std::move(left));
    }
    auto conditions = SparseMatrix<F>::from_columns(k, 2 * r * n, std::move(cols));
    auto solutions = Subspace<F>::kernel(conditions);  // in coordinates of current
    if (solutions.dim() == current.dim()) break;
    current = Subspace<F>::span(solutions.basis() * current.basis());
  }
  return make_subcoalgebra(c, current, passes);
}

}  // namespace hopflim
