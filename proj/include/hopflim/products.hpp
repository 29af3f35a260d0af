#pragma once

// Products and finite limits in the cocommutative fragment.
//
// For cocommutative coalgebras the product is the tensor product with
// projections eps (x) .. (x) id (x) .. (x) eps, and the mediating map of a cone
// (g_i) is (g_1 (x) .. (x) g_n) o delta^(n-1). Bialgebra and Hopf structures on
// the product are obtained from the same universal property and compared
// against the componentwise formulas. Limits are equalizers of the two maps
// induced between the product over objects and the product over arrows.

#include <string>
#include <utility>
#include <vector>

#include "hopflim/equalizers.hpp"

namespace hopflim {

template <class Obj>
struct ProductResult {
  Obj object;
  std::vector<Morphism<Obj>> projections;
  /// (input name, tensor position); positions follow the input order.
  std::vector<std::pair<std::string, std::size_t>> factor_index;
  // Verification flags recorded at the bialgebra and Hopf levels.
  bool unit_mult_diagrams = false;     // pi_i eta = eta_i and pi_i m = m_i (pi_i (x) pi_i)
  bool antipode_diagram = false;       // pi_i S = S_i pi_i
  bool antipode_is_opcop_map = false;  // S : B^{op,cop} -> B is a bialgebra map
  bool antipode_core_full = false;     // antipode_core(B, S) is all of B
};

/// Tensor product coalgebra C (x) D.
template <Field F>
Coalgebra<F> tensor_coalgebra(const Coalgebra<F>& c, const Coalgebra<F>& d, std::string name) {
  require_same_field(c.field(), d.field(), "tensor_coalgebra");
  const F& k = c.field();
  const std::size_t n = c.dim(), m = d.dim();
  std::vector<SparseVec<F>> cols;
  Vector<F> counit;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      cols.push_back(detail::shuffle_tensor(k, c.delta().column(a), n, d.delta().column(b), m));
      counit.push_back(k.mul(c.counit()[a], d.counit()[b]));
    }
  return Coalgebra<F>::make(std::move(name), SparseMatrix<F>::from_columns(k, n * m * n * m, std::move(cols)),
                            std::move(counit));
}

namespace detail {

inline std::string join_names(const std::vector<std::string>& names) {
  if (names.empty()) return "k";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " x " : "") + names[i];
  return out;
}

/// Matrix of eps (x) .. (x) id (x) .. (x) eps with id at position `pos`.
template <Field F>
Matrix<F> projection_matrix(const F& k, const std::vector<Coalgebra<F>>& factors, std::size_t pos) {
  std::size_t total = 1;
  for (const auto& c : factors) total *= c.dim();
  Matrix<F> p(k, factors[pos].dim(), total);
  std::vector<std::size_t> digits(factors.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = rest % factors[i].dim();
      rest /= factors[i].dim();
    }
    auto coeff = k.one();
    for (std::size_t i = 0; i < factors.size() && !k.is_zero(coeff); ++i)
      if (i != pos) coeff = k.mul(coeff, factors[i].counit()[digits[i]]);
    if (!k.is_zero(coeff)) p(digits[pos], idx) = coeff;
  }
  return p;
}

template <Field F>
Coalgebra<F> tensor_all(const F& k, const std::vector<Coalgebra<F>>& factors, const std::string& name) {
  if (factors.empty()) return Coalgebra<F>::trivial(k, name);
  Coalgebra<F> acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_coalgebra(acc, factors[i], name);
  return acc.renamed(name);
}

/// (g_1 (x) .. (x) g_n) o delta^(n-1) for maps g_i out of a common domain.
template <Field F>
Matrix<F> tensor_cone(const Coalgebra<F>& dom, const std::vector<Matrix<F>>& maps) {
  const F& k = dom.field();
  if (maps.empty()) return Matrix<F>::from_rows(k, {dom.counit()}, dom.dim());
  if (dom.dim() == 0) {
    std::size_t rows = 1;
    for (const auto& g : maps) rows *= g.rows();
    return Matrix<F>(k, rows, 0);
  }
  auto acc = iterated_delta(dom, maps.size());
  std::size_t left = 1, right = 1;
  for (std::size_t i = 1; i < maps.size(); ++i) right *= dom.dim();
  for (const auto& g : maps) {
    acc = compose_on_factor(SparseMatrix<F>::from_dense(g), left, right, acc);
    left *= g.rows();
    if (right > 1) right /= dom.dim();
  }
  return acc.to_dense();
}

template <class Obj>
const typename Obj::field_type& field_of(const std::vector<Obj>& objs, const typename Obj::field_type& fallback) {
  return objs.empty() ? fallback : objs.front().field();
}

}  // namespace detail

/// Product of cocommutative coalgebras. The empty product is the trivial
/// coalgebra k (the terminal object).
template <Field F>
ProductResult<Coalgebra<F>> product_cocommutative(const std::vector<Coalgebra<F>>& factors, const F& field = F{}) {
  const F& k = detail::field_of(factors, field);
  std::vector<std::string> names;
  for (const auto& c : factors) {
    require_same_field(k, c.field(), "product_cocommutative");
    c.require_verified("product_cocommutative");
    if (!c.cocommutative())
      throw UnsupportedFragment("product_cocommutative: factor '" + c.name() +
                                "' is not cocommutative; only the cocommutative and conilpotent fragments are supported");
    names.push_back(c.name());
  }
  ProductResult<Coalgebra<F>> out;
  out.object = detail::tensor_all(k, factors, detail::join_names(names));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Morphism<Coalgebra<F>> p{out.object, factors[i], detail::projection_matrix(k, factors, i), Certificate::linear_only};
    if (!check_morphism(p)) throw InternalConsistencyError("product projection is not a coalgebra map");
    out.projections.push_back(std::move(p));
    out.factor_index.emplace_back(factors[i].name(), i);
  }
  return out;
}

/// Mediating morphism theta : D' -> P of a cone (g_i : D' -> C_i), with
/// pi_i theta = g_i verified. At the bialgebra and Hopf levels the algebra
/// identities pi_i theta m = pi_i m (theta (x) theta) and pi_i theta eta =
/// pi_i eta are verified as well.
template <class Obj>
Morphism<Obj> mediate_product(const ProductResult<Obj>& p, const std::vector<Morphism<Obj>>& cone) {
  using F = typename Obj::field_type;
  constexpr auto level = level_of<Obj>();
  if (cone.size() != p.projections.size()) throw PreconditionError("mediate_product: cone has the wrong number of legs");
  if (cone.empty()) {
    // The empty product is terminal; the unique map is the counit (or eta eps one level up).
    throw PreconditionError("mediate_product: an empty cone carries no domain; use terminal_map");
  }
  const Obj& dom = cone.front().dom;
  std::vector<Matrix<F>> legs;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    const auto& g = cone[i];
    if (!at_least(g.certificate, level))
      throw PreconditionError(std::string("mediate_product: leg ") + std::to_string(i) + " is not a certified " +
                              to_string(level) + " map");
    if (!(g.dom == dom)) throw PreconditionError("mediate_product: legs have different domains");
    if (!(g.cod == p.projections[i].cod)) throw PreconditionError("mediate_product: leg codomain differs from factor");
    legs.push_back(g.matrix);
  }
  if (!dom.cocommutative())
    throw UnsupportedFragment("mediate_product: domain '" + dom.name() + "' is not cocommutative");
  Morphism<Obj> theta{dom, p.object, detail::tensor_cone(coalgebra_of(dom), legs), Certificate::linear_only};
  for (std::size_t i = 0; i < cone.size(); ++i)
    if (!(p.projections[i].matrix * theta.matrix == cone[i].matrix))
      throw InternalConsistencyError("mediate_product: projection law fails on leg " + std::to_string(i));
  if constexpr (level != Certificate::coalgebra) {
    const auto& b = bialgebra_of(p.object);
    const auto& bd = bialgebra_of(dom);
    auto ts = SparseMatrix<F>::from_dense(theta.matrix);
    for (const auto& pi : p.projections) {
      auto ps = SparseMatrix<F>::from_dense(pi.matrix);
      auto lhs = compose(ps, compose(ts, bd.mult()));
      auto rhs = compose(ps, compose(b.mult(), kron(ts, ts)));
      if (!(lhs == rhs)) throw InternalConsistencyError("mediate_product: multiplicative cone identity fails");
      if (pi.matrix * (theta.matrix * bd.unit()) != pi.matrix * b.unit())
        throw InternalConsistencyError("mediate_product: unit cone identity fails");
    }
  }
  if (!certify(theta)) throw InternalConsistencyError("mediate_product: mediator is not a morphism at the cone's level");
  return theta;
}

/// The unique morphism from `dom` to the empty product.
template <class Obj>
Morphism<Obj> terminal_map(const Obj& dom, const ProductResult<Obj>& empty_product) {
  using F = typename Obj::field_type;
  Morphism<Obj> t{dom, empty_product.object,
                  Matrix<F>::from_rows(dom.field(), {coalgebra_of(dom).counit()}, dom.dim()), Certificate::linear_only};
  if (!certify(t)) throw InternalConsistencyError("terminal_map: counit is not a morphism");
  return t;
}

template <class Obj>
Morphism<Obj> mediate_or_terminal(const Obj& dom, const ProductResult<Obj>& p, const std::vector<Morphism<Obj>>& cone) {
  return cone.empty() ? terminal_map(dom, p) : mediate_product(p, cone);
}

/// Product of cocommutative bialgebras. Multiplication and unit are the
/// mediating coalgebra maps of the cones m_i (pi_i (x) pi_i) and eta_i; they
/// are checked against the componentwise tensor formulas, the defining
/// diagrams, and the bialgebra axioms.
template <Field F>
ProductResult<Bialgebra<F>> product_bialg(const std::vector<Bialgebra<F>>& factors, const F& field = F{}) {
  const F& k = detail::field_of(factors, field);
  std::vector<Coalgebra<F>> coalgebras;
  for (const auto& b : factors) {
    b.require_verified("product_bialg");
    coalgebras.push_back(b.coalgebra());
  }
  auto cp = product_cocommutative(coalgebras, k);
  const auto& pc = cp.object;

  // Componentwise formulas.
  SparseMatrix<F> mult = SparseMatrix<F>::identity(k, 1);
  Vector<F> unit{k.one()};
  std::size_t acc_dim = 1;
  for (const auto& b : factors) {
    mult = tensor_mult(k, mult, acc_dim, b.mult(), b.dim());
    unit = kron(unit, b.unit(), k);
    acc_dim *= b.dim();
  }

  // The same structure through the universal property.
  {
    auto square = tensor_coalgebra(pc, pc, pc.name() + " (x) " + pc.name());
    std::vector<Matrix<F>> mult_legs, unit_legs;
    auto trivial = Coalgebra<F>::trivial(k);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& pi = cp.projections[i].matrix;
      auto ps = SparseMatrix<F>::from_dense(pi);
      mult_legs.push_back(compose(factors[i].mult(), kron(ps, ps)).to_dense());
      unit_legs.push_back(Matrix<F>::column(k, factors[i].unit()));
    }
    if (!factors.empty()) {
      auto via_cone = detail::tensor_cone(square, mult_legs);
      if (!(via_cone == mult.to_dense()))
        throw InternalConsistencyError("product_bialg: mediating multiplication differs from the tensor formula");
      auto unit_cone = detail::tensor_cone(trivial, unit_legs);
      if (unit_cone.column_vector(0) != unit)
        throw InternalConsistencyError("product_bialg: mediating unit differs from the tensor formula");
    }
  }

  ProductResult<Bialgebra<F>> out;
  out.object = Bialgebra<F>::make(pc, mult, unit);
  bool diagrams = true;
  auto ms = out.object.mult();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto ps = SparseMatrix<F>::from_dense(cp.projections[i].matrix);
    if (!(compose(ps, ms) == compose(factors[i].mult(), kron(ps, ps)))) diagrams = false;
    if (cp.projections[i].matrix * unit != factors[i].unit()) diagrams = false;
  }
  if (!diagrams) throw InternalConsistencyError("product_bialg: unit/multiplication diagrams do not commute");
  out.unit_mult_diagrams = true;
  if (!out.object.verified())
    throw InternalConsistencyError("product_bialg: product fails the bialgebra axioms (" +
                                   out.object.axiom_report().message() + ")");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Morphism<Bialgebra<F>> p{out.object, factors[i], cp.projections[i].matrix, Certificate::linear_only};
    if (!certify(p)) throw InternalConsistencyError("product_bialg: projection is not a bialgebra map");
    out.projections.push_back(std::move(p));
  }
  out.factor_index = cp.factor_index;
  return out;
}

/// Product of cocommutative Hopf algebras. The antipode is the mediating
/// map of the cone S_i pi_i out of B^{op,cop}; the result is checked against
/// S_1 (x) .. (x) S_n, the antipode diagram, the bialgebra-map property on
/// B^{op,cop}, the Hopf axioms, and antipode_core = B.
template <Field F>
ProductResult<HopfAlgebra<F>> product_hopf(const std::vector<HopfAlgebra<F>>& factors, const F& field = F{}) {
  const F& k = detail::field_of(factors, field);
  std::vector<Bialgebra<F>> bialgebras;
  for (const auto& h : factors) {
    h.require_verified("product_hopf");
    bialgebras.push_back(h.bialgebra());
  }
  auto bp = product_bialg(bialgebras, k);
  const auto& b = bp.object;

  Matrix<F> antipode = Matrix<F>::identity(k, 1);
  if (!factors.empty()) {
    antipode = factors.front().antipode();
    for (std::size_t i = 1; i < factors.size(); ++i) antipode = kron(antipode, factors[i].antipode());
  }
  auto opcop = op_cop(b);
  if (!factors.empty()) {
    std::vector<Matrix<F>> legs;
    for (std::size_t i = 0; i < factors.size(); ++i) legs.push_back(factors[i].antipode() * bp.projections[i].matrix);
    if (!(detail::tensor_cone(opcop.coalgebra(), legs) == antipode))
      throw InternalConsistencyError("product_hopf: mediating antipode differs from the tensor formula");
  }

  ProductResult<HopfAlgebra<F>> out;
  out.unit_mult_diagrams = bp.unit_mult_diagrams;
  out.antipode_diagram = true;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!(bp.projections[i].matrix * antipode == factors[i].antipode() * bp.projections[i].matrix))
      out.antipode_diagram = false;
  out.antipode_is_opcop_map = check_bialgebra_map(opcop, b, antipode).pass;
  out.object = HopfAlgebra<F>::make(b, antipode);
  out.antipode_core_full = antipode_core(b, antipode).full();
  if (!out.antipode_diagram || !out.antipode_is_opcop_map || !out.object.verified() || !out.antipode_core_full)
    throw InternalConsistencyError("product_hopf: antipode verification failed");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Morphism<HopfAlgebra<F>> p{out.object, factors[i], bp.projections[i].matrix, Certificate::linear_only};
    if (!certify(p)) throw InternalConsistencyError("product_hopf: projection is not a Hopf map");
    out.projections.push_back(std::move(p));
  }
  out.factor_index = bp.factor_index;
  return out;
}

template <Field F>
ProductResult<Coalgebra<F>> product_of(const std::vector<Coalgebra<F>>& objs, const F& k) {
  return product_cocommutative(objs, k);
}
template <Field F>
ProductResult<Bialgebra<F>> product_of(const std::vector<Bialgebra<F>>& objs, const F& k) {
  return product_bialg(objs, k);
}
template <Field F>
ProductResult<HopfAlgebra<F>> product_of(const std::vector<HopfAlgebra<F>>& objs, const F& k) {
  return product_hopf(objs, k);
}

template <class Obj>
struct Arrow {
  std::string name;
  std::size_t dom = 0;  // index into Diagram::objects
  std::size_t cod = 0;
  Morphism<Obj> map;
};

/// A finite diagram. Identity arrows may be omitted; they impose nothing.
template <class Obj>
struct Diagram {
  std::vector<std::pair<std::string, Obj>> objects;
  std::vector<Arrow<Obj>> arrows;

  std::size_t object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i].first == name) return i;
    throw PreconditionError("diagram: unknown object '" + name + "'");
  }

  Diagram& add_object(std::string name, Obj obj) {
    for (const auto& o : objects)
      if (o.first == name) throw PreconditionError("diagram: duplicate object '" + name + "'");
    objects.emplace_back(std::move(name), std::move(obj));
    return *this;
  }

  Diagram& add_arrow(std::string name, const std::string& dom, const std::string& cod, Morphism<Obj> map) {
    auto d = object_index(dom), c = object_index(cod);
    if (!(map.dom == objects[d].second) || !(map.cod == objects[c].second))
      throw PreconditionError("diagram: arrow '" + name + "' does not connect its named objects");
    if (!at_least(map.certificate, level_of<Obj>()))
      throw PreconditionError("diagram: arrow '" + name + "' is not certified at the diagram level");
    arrows.push_back({std::move(name), d, c, std::move(map)});
    return *this;
  }
};

/// f, g : prod_j F(j) -> prod_u F(cod u) with p_u f = p_{cod u} and
/// p_u g = F(u) p_{dom u}.
template <class Obj>
std::pair<Morphism<Obj>, Morphism<Obj>> induced_pair(const Diagram<Obj>& d, const ProductResult<Obj>& objects_product,
                                                     const ProductResult<Obj>& arrows_product) {
  std::vector<Morphism<Obj>> f_legs, g_legs;
  for (const auto& u : d.arrows) {
    f_legs.push_back(objects_product.projections[u.cod]);
    g_legs.push_back(compose(u.map, objects_product.projections[u.dom]));
  }
  const auto& dom = objects_product.object;
  return {mediate_or_terminal(dom, arrows_product, f_legs), mediate_or_terminal(dom, arrows_product, g_legs)};
}

template <class Obj>
struct LimitResult {
  ProductResult<Obj> objects_product;
  ProductResult<Obj> arrows_product;
  std::pair<Morphism<Obj>, Morphism<Obj>> equalizer_pair;
  EqualizerResult<Obj> equalizer;  // carrier lives inside objects_product.object
  std::vector<Morphism<Obj>> cone;  // phi_j = p_j e
  bool cone_commutes = false;
};

/// Limit of a finite diagram of cocommutative objects: the equalizer (by the
/// remark1 formula, cross-checked) of the induced pair, with cone p_j e.
template <class Obj>
LimitResult<Obj> limit(const Diagram<Obj>& d) {
  using F = typename Obj::field_type;
  if (d.objects.empty()) throw PreconditionError("limit: diagram has no objects");
  const F& k = d.objects.front().second.field();
  std::vector<Obj> objs, cods;
  for (const auto& [name, o] : d.objects) {
    if (!o.cocommutative())
      throw UnsupportedFragment("limit: object '" + name + "' is not cocommutative; only the cocommutative fragment is supported");
    objs.push_back(o);
  }
  for (const auto& u : d.arrows) cods.push_back(d.objects[u.cod].second);
  LimitResult<Obj> out{product_of(objs, k), product_of(cods, k), {}, {}, {}, false};
  out.equalizer_pair = induced_pair(d, out.objects_product, out.arrows_product);
  out.equalizer = equalize(out.equalizer_pair.first, out.equalizer_pair.second, EqualizerMethod::remark1, true);
  for (const auto& p : out.objects_product.projections) out.cone.push_back(compose(p, out.equalizer.inclusion));
  out.cone_commutes = true;
  for (const auto& u : d.arrows)
    if (!(u.map.matrix * out.cone[u.dom].matrix == out.cone[u.cod].matrix)) out.cone_commutes = false;
  if (!out.cone_commutes) throw InternalConsistencyError("limit: cone does not commute with the diagram");
  return out;
}

}  // namespace hopflim
