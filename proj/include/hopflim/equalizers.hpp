#pragma once

// Equalizers of parallel pairs of coalgebra, bialgebra and Hopf algebra maps.
//
// Two independent computations are available:
//   theorem1: largest subcoalgebra inside S = ker(f - g);
//   remark1:  kernel of c |-> c1 (x) (f - g)(c2) (x) c3, a single linear solve.
// They always agree; remark1 is the default and theorem1 runs beside it as a
// cross-check unless switched off.

#include <optional>
#include <sstream>
#include <string>

#include "hopflim/structures.hpp"

namespace hopflim {

enum class EqualizerMethod { theorem1, remark1 };

inline const char* to_string(EqualizerMethod m) { return m == EqualizerMethod::theorem1 ? "theorem1" : "remark1"; }

template <class Obj>
struct EqualizerResult {
  using F = typename Obj::field_type;

  Morphism<Obj> f;
  Morphism<Obj> g;
  Subcoalgebra<F> carrier;
  Obj object;               // restricted structure at Obj's level
  Morphism<Obj> inclusion;  // object -> dom(f)
  EqualizerMethod method = EqualizerMethod::remark1;
  std::optional<ClosureReport> closure;  // bialgebra and Hopf levels only
  bool cross_checked = false;            // theorem1 and remark1 both ran and agreed
};

/// S = {c : f(c) = g(c)}.
template <Field F>
Subspace<F> agreement_subspace(const Matrix<F>& f, const Matrix<F>& g) {
  return Subspace<F>::kernel(f - g);
}

/// {c : c1 (x) f(c2) (x) c3 = c1 (x) g(c2) (x) c3}.
template <Field F>
Subspace<F> remark1_subspace(const Coalgebra<F>& c, const Matrix<F>& f, const Matrix<F>& g) {
  auto diff = SparseMatrix<F>::from_dense(f - g);
  auto delta2 = iterated_delta(c, 3);
  return Subspace<F>::kernel(compose_on_factor(diff, c.dim(), c.dim(), delta2));
}

namespace detail {

template <class Obj>
void require_parallel_pair(const Morphism<Obj>& f, const Morphism<Obj>& g, const char* where) {
  constexpr auto level = level_of<Obj>();
  if (!at_least(f.certificate, level) || !at_least(g.certificate, level))
    throw PreconditionError(std::string(where) + ": both maps must be certified " + to_string(level) + " maps");
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw PreconditionError(std::string(where) + ": maps are not parallel");
  coalgebra_of(f.dom).require_verified(where);
}

template <Field F>
[[noreturn]] void report_disagreement(const Subspace<F>& a, const Subspace<F>& b) {
  std::ostringstream os;
  os << "equalizer methods disagree: theorem1 dim " << a.dim() << ", remark1 dim " << b.dim();
  const F& k = a.field();
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis_vector(i))) {
      os << "; remark1 vector outside theorem1 carrier: (";
      for (std::size_t j = 0; j < b.ambient_dim(); ++j) os << (j ? "," : "") << k.format(b.basis()(i, j));
      os << ")";
      break;
    }
  throw InternalConsistencyError(os.str());
}

template <Field F>
Coalgebra<F> restrict_object(const Coalgebra<F>&, const Subcoalgebra<F>& sub, std::optional<ClosureReport>&) {
  return sub.restricted;
}

template <Field F>
Bialgebra<F> restrict_object(const Bialgebra<F>& b, const Subcoalgebra<F>& sub, std::optional<ClosureReport>& closure) {
  closure.emplace();
  auto r = restrict_bialgebra(b, sub, *closure);
  if (!r) throw InternalConsistencyError("equalizer carrier is not a subbialgebra");
  return *r;
}

template <Field F>
HopfAlgebra<F> restrict_object(const HopfAlgebra<F>& h, const Subcoalgebra<F>& sub, std::optional<ClosureReport>& closure) {
  closure.emplace();
  auto r = restrict_hopf(h, sub, *closure);
  if (!r) throw InternalConsistencyError("equalizer carrier is not a Hopf subalgebra");
  return *r;
}

}  // namespace detail

/// Equalizer of a certified parallel pair at the level of Obj.
template <class Obj>
EqualizerResult<Obj> equalize(const Morphism<Obj>& f, const Morphism<Obj>& g,
                              EqualizerMethod method = EqualizerMethod::remark1, bool cross_check = true) {
  using F = typename Obj::field_type;
  detail::require_parallel_pair(f, g, "equalize");
  const auto& c = coalgebra_of(f.dom);

  std::optional<Subcoalgebra<F>> t1;
  if (method == EqualizerMethod::theorem1 || cross_check)
    t1 = largest_subcoalgebra(c, agreement_subspace(f.matrix, g.matrix));

  std::optional<Subcoalgebra<F>> r1;
  if (method == EqualizerMethod::remark1 || cross_check) {
    auto carrier = remark1_subspace(c, f.matrix, g.matrix);
    r1 = make_subcoalgebra(c, carrier);
  }
  if (t1 && r1 && !(t1->carrier == r1->carrier)) detail::report_disagreement(t1->carrier, r1->carrier);

  EqualizerResult<Obj> out{f, g, method == EqualizerMethod::theorem1 ? *t1 : *r1, {}, {}, method, std::nullopt,
                           t1.has_value() && r1.has_value()};
  out.object = detail::restrict_object(f.dom, out.carrier, out.closure);
  out.inclusion = {out.object, f.dom, out.carrier.carrier.inclusion_matrix(), Certificate::linear_only};
  if (!certify(out.inclusion)) throw InternalConsistencyError("equalizer inclusion failed its certificate");
  if (!(f.matrix * out.inclusion.matrix == g.matrix * out.inclusion.matrix))
    throw InternalConsistencyError("f and g differ on the equalizer");
  return out;
}

template <Field F>
EqualizerResult<Coalgebra<F>> equalizer_coalg(const Morphism<Coalgebra<F>>& f, const Morphism<Coalgebra<F>>& g) {
  return equalize(f, g, EqualizerMethod::theorem1, false);
}

/// Single-solve carrier, always cross-checked against the theorem1 carrier.
template <Field F>
EqualizerResult<Coalgebra<F>> equalizer_remark1(const Morphism<Coalgebra<F>>& f, const Morphism<Coalgebra<F>>& g) {
  return equalize(f, g, EqualizerMethod::remark1, true);
}

template <Field F>
EqualizerResult<Bialgebra<F>> equalizer_bialg(const Morphism<Bialgebra<F>>& f, const Morphism<Bialgebra<F>>& g,
                                              EqualizerMethod method = EqualizerMethod::remark1) {
  return equalize(f, g, method, true);
}

template <Field F>
EqualizerResult<HopfAlgebra<F>> equalizer_hopf(const Morphism<HopfAlgebra<F>>& f, const Morphism<HopfAlgebra<F>>& g,
                                               EqualizerMethod method = EqualizerMethod::remark1) {
  return equalize(f, g, method, true);
}

/// Morphism composition b o a.
template <class Obj>
Morphism<Obj> compose(const Morphism<Obj>& b, const Morphism<Obj>& a) {
  if (!(a.cod == b.dom)) throw PreconditionError("compose: codomain and domain differ");
  auto cert = static_cast<int>(a.certificate) < static_cast<int>(b.certificate) ? a.certificate : b.certificate;
  return {a.dom, b.cod, b.matrix * a.matrix, cert};
}

/// The unique u with inclusion o u = h, for h landing inside `sub`.
/// Returns nullopt when some column of h leaves the carrier.
template <Field F>
std::optional<Matrix<F>> factor_through_subspace(const Subspace<F>& carrier, const Matrix<F>& h) {
  if (h.rows() != carrier.ambient_dim()) throw DimensionMismatch("factor_through: codomain mismatch");
  Matrix<F> u(h.field(), carrier.dim(), h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) {
    auto coords = carrier.coordinates(h.column_vector(j));
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < carrier.dim(); ++i) u(i, j) = (*coords)[i];
  }
  return u;
}

/// Universal property of the equalizer: factors a cone h (f h = g h) through
/// the inclusion.
template <class Obj>
Morphism<Obj> factor_through(const EqualizerResult<Obj>& eq, const Morphism<Obj>& h) {
  constexpr auto level = level_of<Obj>();
  if (!at_least(h.certificate, level))
    throw PreconditionError(std::string("factor_through: h must be a certified ") + to_string(level) + " map");
  if (!(h.cod == eq.f.dom)) throw PreconditionError("factor_through: h does not land in the equalized object");
  if (!(eq.f.matrix * h.matrix == eq.g.matrix * h.matrix)) throw PreconditionError("factor_through: f h != g h");
  if (rank(eq.inclusion.matrix) != eq.carrier.carrier.dim())
    throw InternalConsistencyError("factor_through: inclusion is not injective");
  auto u = factor_through_subspace(eq.carrier.carrier, h.matrix);
  if (!u) throw InternalConsistencyError("factor_through: certified cone leaves the equalizer carrier");
  Morphism<Obj> out{h.dom, eq.object, std::move(*u), Certificate::linear_only};
  if (!certify(out)) throw InternalConsistencyError("factor_through: factorization is not a morphism");
  return out;
}

}  // namespace hopflim
