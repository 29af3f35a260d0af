#pragma once

// Bialgebras and Hopf algebras layered on Coalgebra, with axiom checks,
// op/cop twists, convolution and the antipode-carrier subcoalgebra.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>

#include "hopflim/coalgebra.hpp"

namespace hopflim {

namespace detail {

template <Field F>
SparseVec<F> unit_vector(std::size_t i, const F& k) {
  return {{i, k.one()}};
}

/// delta(x) (x) delta(y) reordered from (x1, x2, y1, y2) to (x1, y1, x2, y2),
/// i.e. the comultiplication of the tensor product coalgebra C (x) D.
template <Field F>
SparseVec<F> shuffle_tensor(const F& k, const SparseVec<F>& dx, std::size_t n, const SparseVec<F>& dy,
                            std::size_t m) {
  Accumulator<F> acc(k);
  for (const auto& [ix, a] : dx) {
    std::size_t x1 = ix / n, x2 = ix % n;
    for (const auto& [iy, b] : dy) {
      std::size_t y1 = iy / m, y2 = iy % m;
      acc.add((x1 * m + y1) * (n * m) + (x2 * m + y2), k.mul(a, b));
    }
  }
  return acc.finish();
}

}  // namespace detail

/// Checks associativity, unitality, and that delta and epsilon are algebra
/// maps. The coalgebra axioms are taken from `c`'s cached report.
template <Field F>
Report check_bialgebra_data(const Coalgebra<F>& c, const SparseMatrix<F>& mult, const Vector<F>& unit) {
  const std::size_t n = c.dim();
  if (mult.rows() != n || mult.cols() != n * n)
    throw MalformedInput("mult must be " + std::to_string(n) + " x " + std::to_string(n * n));
  if (unit.size() != n) throw MalformedInput("unit must have length " + std::to_string(n));
  if (!c.verified()) return c.axiom_report();
  const F& k = c.field();
  auto u = to_sparse(k, unit);

  for (std::size_t t = 0; t < n * n * n; ++t) {
    SparseVec<F> e = {{t, k.one()}};
    auto left = mult.apply(mult.apply_on_factor(e, 1, n));
    auto right = mult.apply(mult.apply_on_factor(e, n, 1));
    if (left != right) return Report::fail("associativity", t);
  }
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec<F> lu, ru;
    for (const auto& [i, v] : u) {
      lu.emplace_back(i * n + j, v);
      ru.emplace_back(j * n + i, v);
    }
    std::sort(lu.begin(), lu.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (mult.apply(lu) != detail::unit_vector(j, k)) return Report::fail("left unit", j);
    if (mult.apply(ru) != detail::unit_vector(j, k)) return Report::fail("right unit", j);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = mult.column(a * n + b);
      auto lhs = c.delta().apply(prod);
      auto shuffled = detail::shuffle_tensor(k, c.delta().column(a), n, c.delta().column(b), n);
      auto rhs = mult.apply_on_factor(mult.apply_on_factor(shuffled, n * n, 1), 1, n);
      if (lhs != rhs) return Report::fail("comultiplication is multiplicative", a * n + b);
      auto eps_prod = k.zero();
      for (const auto& [i, v] : prod) eps_prod = k.add(eps_prod, k.mul(c.counit()[i], v));
      if (!k.equal(eps_prod, k.mul(c.counit()[a], c.counit()[b])))
        return Report::fail("counit is multiplicative", a * n + b);
    }
  auto du = c.delta().apply(u);
  SparseVec<F> uu;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : u) uu.emplace_back(i * n + j, k.mul(a, b));
  if (du != uu) return Report::fail("unit is group-like");
  if (!k.equal(c.apply_counit(unit), k.one())) return Report::fail("counit of unit");
  return Report::ok();
}

/// Bialgebra over a verified coalgebra. `mult` is n x n^2 (column j * n + k
/// holds e_j e_k); `unit` is the image of 1.
/// Componentwise multiplication on A (x) B from mult_a : A (x) A -> A and
/// mult_b : B (x) B -> B.
template <Field F>
SparseMatrix<F> tensor_mult(const F& k, const SparseMatrix<F>& mult_a, std::size_t n, const SparseMatrix<F>& mult_b,
                            std::size_t m) {
  const std::size_t nm = n * m;
  std::vector<SparseVec<F>> cols(nm * nm);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nm; ++y) {
      const auto& pa = mult_a.column((x / m) * n + y / m);
      const auto& pb = mult_b.column((x % m) * m + y % m);
      Accumulator<F> acc(k);
      for (const auto& [i, u] : pa)
        for (const auto& [j, v] : pb) acc.add(i * m + j, k.mul(u, v));
      cols[x * nm + y] = acc.finish();
    }
  return SparseMatrix<F>::from_columns(k, nm, std::move(cols));
}

template <Field F>
class Bialgebra {
 public:
  using field_type = F;

  Bialgebra() = default;

  static Bialgebra make(Coalgebra<F> coalgebra, SparseMatrix<F> mult, Vector<F> unit) {
    auto d = std::make_shared<Data>();
    d->report = check_bialgebra_data(coalgebra, mult, unit);
    d->coalgebra = std::move(coalgebra);
    d->mult = std::move(mult);
    d->unit = std::move(unit);
    Bialgebra b;
    b.d_ = std::move(d);
    return b;
  }

  const Coalgebra<F>& coalgebra() const { return d_->coalgebra; }
  const std::string& name() const { return coalgebra().name(); }
  const F& field() const { return coalgebra().field(); }
  std::size_t dim() const { return coalgebra().dim(); }
  const SparseMatrix<F>& mult() const { return d_->mult; }
  const Vector<F>& unit() const { return d_->unit; }
  const Report& axiom_report() const { return d_->report; }
  bool verified() const { return d_->report.pass; }
  bool cocommutative() const { return coalgebra().cocommutative(); }

  void require_verified(const char* where) const {
    if (!verified())
      throw AxiomError(std::string(where) + ": '" + name() + "' is not a bialgebra (" + d_->report.message() + ")");
  }

  Vector<F> multiply(const Vector<F>& x, const Vector<F>& y) const {
    return to_dense(field(), d_->mult.apply(to_sparse(field(), kron(x, y, field()))), dim());
  }

  Bialgebra renamed(std::string name) const { return make(coalgebra().renamed(std::move(name)), mult(), unit()); }

  friend bool operator==(const Bialgebra& a, const Bialgebra& b) {
    return a.coalgebra() == b.coalgebra() && a.mult() == b.mult() && a.unit() == b.unit();
  }

 private:
  struct Data {
    Coalgebra<F> coalgebra;
    SparseMatrix<F> mult;
    Vector<F> unit;
    Report report;
  };
  std::shared_ptr<const Data> d_;
};

template <Field F>
Report check_bialgebra(const Bialgebra<F>& b) {
  return b.axiom_report();
}

/// The map eta o epsilon.
template <Field F>
Matrix<F> unit_counit(const Bialgebra<F>& b) {
  return Matrix<F>::column(b.field(), b.unit()) * Matrix<F>::from_rows(b.field(), {b.coalgebra().counit()}, b.dim());
}

/// Convolution m o (f (x) g) o delta of maps from `dom` into the algebra `cod`.
template <Field F>
Matrix<F> convolve(const Coalgebra<F>& dom, const Bialgebra<F>& cod, const Matrix<F>& f, const Matrix<F>& g) {
  if (f.rows() != cod.dim() || g.rows() != cod.dim() || f.cols() != dom.dim() || g.cols() != dom.dim())
    throw DimensionMismatch("convolve: shapes do not fit");
  auto fs = SparseMatrix<F>::from_dense(f), gs = SparseMatrix<F>::from_dense(g);
  return compose(cod.mult(), tensor_compose(fs, gs, dom.delta())).to_dense();
}

template <Field F>
Report check_hopf_data(const Bialgebra<F>& b, const Matrix<F>& antipode) {
  if (antipode.rows() != b.dim() || antipode.cols() != b.dim())
    throw MalformedInput("antipode must be " + std::to_string(b.dim()) + " x " + std::to_string(b.dim()));
  if (!b.verified()) return b.axiom_report();
  auto id = Matrix<F>::identity(b.field(), b.dim());
  auto target = unit_counit(b);
  auto left = convolve(b.coalgebra(), b, antipode, id);
  auto right = convolve(b.coalgebra(), b, id, antipode);
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (left.column_vector(j) != target.column_vector(j)) return Report::fail("left antipode", j);
    if (right.column_vector(j) != target.column_vector(j)) return Report::fail("right antipode", j);
  }
  return Report::ok();
}

template <Field F>
class HopfAlgebra {
 public:
  using field_type = F;

  HopfAlgebra() = default;

  static HopfAlgebra make(Bialgebra<F> bialgebra, Matrix<F> antipode) {
    auto d = std::make_shared<Data>();
    d->report = check_hopf_data(bialgebra, antipode);
    d->bialgebra = std::move(bialgebra);
    d->antipode = std::move(antipode);
    HopfAlgebra h;
    h.d_ = std::move(d);
    return h;
  }

  const Bialgebra<F>& bialgebra() const { return d_->bialgebra; }
  const Coalgebra<F>& coalgebra() const { return bialgebra().coalgebra(); }
  const std::string& name() const { return coalgebra().name(); }
  const F& field() const { return coalgebra().field(); }
  std::size_t dim() const { return coalgebra().dim(); }
  const Matrix<F>& antipode() const { return d_->antipode; }
  const Report& axiom_report() const { return d_->report; }
  bool verified() const { return d_->report.pass; }
  bool cocommutative() const { return coalgebra().cocommutative(); }

  void require_verified(const char* where) const {
    if (!verified())
      throw AxiomError(std::string(where) + ": '" + name() + "' is not a Hopf algebra (" + d_->report.message() + ")");
  }

  HopfAlgebra renamed(std::string name) const { return make(bialgebra().renamed(std::move(name)), antipode()); }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.bialgebra() == b.bialgebra() && a.antipode() == b.antipode();
  }

 private:
  struct Data {
    Bialgebra<F> bialgebra;
    Matrix<F> antipode;
    Report report;
  };
  std::shared_ptr<const Data> d_;
};

template <Field F>
Report check_hopf(const HopfAlgebra<F>& h) {
  return h.axiom_report();
}

// Uniform access to the layers of a structure.
template <Field F>
const Coalgebra<F>& coalgebra_of(const Coalgebra<F>& c) { return c; }
template <Field F>
const Coalgebra<F>& coalgebra_of(const Bialgebra<F>& b) { return b.coalgebra(); }
template <Field F>
const Coalgebra<F>& coalgebra_of(const HopfAlgebra<F>& h) { return h.coalgebra(); }
template <Field F>
const Bialgebra<F>& bialgebra_of(const Bialgebra<F>& b) { return b; }
template <Field F>
const Bialgebra<F>& bialgebra_of(const HopfAlgebra<F>& h) { return h.bialgebra(); }

template <class Obj>
constexpr Certificate level_of() {
  using F = typename Obj::field_type;
  if constexpr (std::is_same_v<Obj, Coalgebra<F>>) return Certificate::coalgebra;
  else if constexpr (std::is_same_v<Obj, Bialgebra<F>>) return Certificate::bialgebra;
  else return Certificate::hopf;
}

/// B^{op,cop}: multiplication and comultiplication composed with the flip.
template <Field F>
Bialgebra<F> op_cop(const Bialgebra<F>& b) {
  const std::size_t n = b.dim();
  auto tau = flip(b.field(), n, n);
  auto coalg = Coalgebra<F>::make(b.name() + "^opcop", compose(tau, b.coalgebra().delta()), b.coalgebra().counit());
  return Bialgebra<F>::make(std::move(coalg), compose(b.mult(), tau), b.unit());
}

/// Same antipode: S is also an antipode of B^{op,cop}.
template <Field F>
HopfAlgebra<F> op_cop(const HopfAlgebra<F>& h) {
  return HopfAlgebra<F>::make(op_cop(h.bialgebra()), h.antipode());
}

/// Algebra-map identities on top of check_coalgebra_map.
template <Field F>
Report check_bialgebra_map(const Bialgebra<F>& dom, const Bialgebra<F>& cod, const Matrix<F>& f) {
  if (auto r = check_coalgebra_map(dom.coalgebra(), cod.coalgebra(), f); !r) return r;
  auto fs = SparseMatrix<F>::from_dense(f);
  auto lhs = compose(fs, dom.mult());
  auto rhs = compose(cod.mult(), kron(fs, fs));
  if (auto j = detail::first_difference(lhs, rhs)) return Report::fail("multiplicativity", j);
  if (f * dom.unit() != cod.unit()) return Report::fail("unit preservation");
  return Report::ok();
}

/// Bialgebra map plus f S_dom = S_cod f (implied by the former; asserted).
template <Field F>
Report check_hopf_map(const HopfAlgebra<F>& dom, const HopfAlgebra<F>& cod, const Matrix<F>& f) {
  if (auto r = check_bialgebra_map(dom.bialgebra(), cod.bialgebra(), f); !r) return r;
  auto lhs = f * dom.antipode(), rhs = cod.antipode() * f;
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (lhs.column_vector(j) != rhs.column_vector(j)) return Report::fail("antipode compatibility", j);
  return Report::ok();
}

/// Checks a morphism at its object level and upgrades its certificate.
template <Field F>
Report certify(Morphism<Coalgebra<F>>& f) {
  return check_morphism(f);
}

template <Field F>
Report certify(Morphism<Bialgebra<F>>& f) {
  auto r = check_bialgebra_map(f.dom, f.cod, f.matrix);
  if (r) f.certificate = Certificate::bialgebra;
  else if (check_coalgebra_map(f.dom.coalgebra(), f.cod.coalgebra(), f.matrix)) f.certificate = Certificate::coalgebra;
  return r;
}

template <Field F>
Report certify(Morphism<HopfAlgebra<F>>& f) {
  auto r = check_hopf_map(f.dom, f.cod, f.matrix);
  if (r) f.certificate = Certificate::hopf;
  else if (check_coalgebra_map(f.dom.coalgebra(), f.cod.coalgebra(), f.matrix)) f.certificate = Certificate::coalgebra;
  return r;
}

/// Forgets the algebra layers; certificates above `coalgebra` collapse to it.
template <class Obj>
Morphism<Coalgebra<typename Obj::field_type>> as_coalgebra_morphism(const Morphism<Obj>& f) {
  auto cert = at_least(f.certificate, Certificate::coalgebra) ? Certificate::coalgebra : Certificate::linear_only;
  return {coalgebra_of(f.dom), coalgebra_of(f.cod), f.matrix, cert};
}

template <Field F>
Morphism<Bialgebra<F>> as_bialgebra_morphism(const Morphism<HopfAlgebra<F>>& f) {
  auto cert = f.certificate == Certificate::hopf ? Certificate::bialgebra : f.certificate;
  return {f.dom.bialgebra(), f.cod.bialgebra(), f.matrix, cert};
}

/// Closure of a subcoalgebra carrier under the algebra structure.
struct ClosureReport {
  bool mult_closed = false;
  bool unit_in = false;
  bool antipode_stable = false;
};

/// Restricted bialgebra structure on a subcoalgebra, or nullopt when the
/// carrier is not a subalgebra. `closure` is filled either way.
template <Field F>
std::optional<Bialgebra<F>> restrict_bialgebra(const Bialgebra<F>& b, const Subcoalgebra<F>& sub, ClosureReport& closure) {
  const F& k = b.field();
  const auto& s = sub.carrier;
  const std::size_t d = s.dim();
  std::vector<SparseVec<F>> cols;
  closure.mult_closed = true;
  for (std::size_t i = 0; i < d && closure.mult_closed; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = s.coordinates(b.multiply(s.basis_vector(i), s.basis_vector(j)));
      if (!coords) {
        closure.mult_closed = false;
        break;
      }
      cols.push_back(to_sparse(k, *coords));
    }
  auto unit = s.coordinates(b.unit());
  closure.unit_in = unit.has_value();
  if (!closure.mult_closed || !closure.unit_in) return std::nullopt;
  return Bialgebra<F>::make(sub.restricted, SparseMatrix<F>::from_columns(k, d, std::move(cols)), std::move(*unit));
}

template <Field F>
std::optional<HopfAlgebra<F>> restrict_hopf(const HopfAlgebra<F>& h, const Subcoalgebra<F>& sub, ClosureReport& closure) {
  auto b = restrict_bialgebra(h.bialgebra(), sub, closure);
  const auto& s = sub.carrier;
  Matrix<F> restricted(h.field(), s.dim(), s.dim());
  closure.antipode_stable = true;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto coords = s.coordinates(h.antipode() * s.basis_vector(j));
    if (!coords) {
      closure.antipode_stable = false;
      break;
    }
    for (std::size_t i = 0; i < s.dim(); ++i) restricted(i, j) = (*coords)[i];
  }
  if (!b || !closure.antipode_stable) return std::nullopt;
  return HopfAlgebra<F>::make(std::move(*b), std::move(restricted));
}

template <Field F>
struct AntipodeCore {
  Subspace<F> agreement;  // elements where both convolution identities hold
  Subcoalgebra<F> core;   // largest subcoalgebra inside `agreement`
  ClosureReport closure;
  bool full() const { return core.carrier.dim() == core.parent.dim(); }
};

/// Largest subcoalgebra on which S(h1) h2 = h1 S(h2) = eta eps(h), with the
/// three closure properties (products, unit, S-stability) recorded.
template <Field F>
AntipodeCore<F> antipode_core(const Bialgebra<F>& b, const Matrix<F>& antipode) {
  b.require_verified("antipode_core");
  if (antipode.rows() != b.dim() || antipode.cols() != b.dim()) throw DimensionMismatch("antipode_core: S must be square");
  auto id = Matrix<F>::identity(b.field(), b.dim());
  auto target = unit_counit(b);
  auto left = convolve(b.coalgebra(), b, antipode, id) - target;
  auto right = convolve(b.coalgebra(), b, id, antipode) - target;
  auto agreement = Subspace<F>::kernel(vstack(left, right));
  auto core = largest_subcoalgebra(b.coalgebra(), agreement);
  ClosureReport closure;
  restrict_bialgebra(b, core, closure);
  closure.antipode_stable = true;
  for (std::size_t i = 0; i < core.carrier.dim(); ++i)
    if (!core.carrier.contains(antipode * core.carrier.basis_vector(i))) closure.antipode_stable = false;
  return {std::move(agreement), std::move(core), closure};
}

}  // namespace hopflim
