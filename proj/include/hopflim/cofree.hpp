#pragma once

// Degree-truncated tensor coalgebra with deconcatenation, lifts of linear
// maps along p : T(V) -> V, and the product of conilpotent coalgebras as the
// largest subcoalgebra of T(V) on which the corrected projections q_i are
// coalgebra maps.

#include <optional>
#include <string>
#include <vector>

#include "hopflim/equalizers.hpp"
#include "hopflim/products.hpp"

namespace hopflim {

/// A coalgebra with a designated group-like element 1.
template <Field F>
struct CoaugmentedCoalgebra {
  Coalgebra<F> coalgebra;
  Vector<F> unit;

  static CoaugmentedCoalgebra make(Coalgebra<F> c, Vector<F> unit) {
    c.require_verified("coaugmentation");
    if (unit.size() != c.dim()) throw DimensionMismatch("coaugmentation: unit has the wrong length");
    const F& k = c.field();
    if (!k.equal(c.apply_counit(unit), k.one()) || c.apply_delta(unit) != to_sparse(k, kron(unit, unit, k)))
      throw PreconditionError("coaugmentation: unit of '" + c.name() + "' is not group-like");
    return {std::move(c), std::move(unit)};
  }

  const F& field() const { return coalgebra.field(); }
  std::size_t dim() const { return coalgebra.dim(); }

  /// id - 1 eps, the projection onto the counit kernel.
  Matrix<F> reduction() const {
    return Matrix<F>::identity(field(), dim()) - Matrix<F>::column(field(), unit) *
                                                     Matrix<F>::from_rows(field(), {coalgebra.counit()}, dim());
  }
};

/// Designates basis vector `index` as the unit.
template <Field F>
CoaugmentedCoalgebra<F> coaugment(const Coalgebra<F>& c, std::size_t index = 0) {
  if (index >= c.dim()) throw PreconditionError("coaugment: index out of range");
  Vector<F> u(c.dim(), c.field().zero());
  u[index] = c.field().one();
  return CoaugmentedCoalgebra<F>::make(c, std::move(u));
}

namespace detail {

/// pi^(x)k delta^(k-1) for k = 1, 2, ... until it vanishes or k exceeds
/// `max_order`. Entry k-1 of the result holds the order-k map.
template <Field F>
std::vector<SparseMatrix<F>> reduced_coproducts(const CoaugmentedCoalgebra<F>& c, std::size_t max_order) {
  auto pi = SparseMatrix<F>::from_dense(c.reduction());
  auto reduced_delta = compose(kron(pi, pi), c.coalgebra.delta());
  std::vector<SparseMatrix<F>> out{pi};
  std::size_t left = 1;
  while (out.back().nonzeros() > 0 && out.size() < max_order) {
    out.push_back(compose_on_factor(reduced_delta, left, 1, out.back()));
    left *= c.dim();
  }
  return out;
}

}  // namespace detail

/// Smallest N with pi^(x)(N+1) delta^(N) = 0, or nullopt if the coalgebra is
/// not conilpotent (the index of a conilpotent coalgebra is below its dimension).
template <Field F>
std::optional<std::size_t> conilpotency_index(const CoaugmentedCoalgebra<F>& c) {
  auto r = detail::reduced_coproducts(c, c.dim() + 1);
  if (r.back().nonzeros() > 0) return std::nullopt;
  return r.size() - 1;
}

template <Field F>
struct TruncatedCofree {
  std::size_t v_dim = 0;
  std::size_t degree_bound = 0;
  Coalgebra<F> coalgebra;
  Vector<F> unit;                   // the empty word
  Matrix<F> p;                      // projection onto the degree-1 words
  std::vector<std::size_t> offsets; // offsets[k] = index of the first word of length k; offsets[N+1] = dim

  std::size_t dim() const { return offsets.back(); }
  std::size_t degree_of(std::size_t index) const {
    std::size_t k = 0;
    while (offsets[k + 1] <= index) ++k;
    return k;
  }
  CoaugmentedCoalgebra<F> coaugmented() const { return {coalgebra, unit}; }
};

inline constexpr std::size_t cofree_dimension_limit = 4096;

namespace detail {

template <Field F>
TruncatedCofree<F> build_cofree(std::size_t v, std::size_t n, const F& k) {
  std::vector<std::size_t> offsets{0};
  std::vector<std::size_t> powers{1};
  std::size_t total = 0;
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) powers.push_back(powers.back() * v);
    total += powers[d];
    if (total > cofree_dimension_limit)
      throw PreconditionError("truncated_cofree: dimension exceeds " + std::to_string(cofree_dimension_limit));
    offsets.push_back(total);
  }
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (std::size_t d = 0; d <= n; ++d)
    for (std::size_t w = 0; w < powers[d]; ++w)
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t prefix = w / powers[d - i], suffix = w % powers[d - i];
        t.emplace_back((offsets[i] + prefix) * total + offsets[d - i] + suffix, offsets[d] + w, k.one());
      }
  Vector<F> counit(total, k.zero());
  counit[0] = k.one();
  TruncatedCofree<F> out;
  out.v_dim = v;
  out.degree_bound = n;
  out.coalgebra = Coalgebra<F>::make("T(" + std::to_string(v) + ")<=" + std::to_string(n),
                                     SparseMatrix<F>::from_triplets(k, total * total, total, t), counit);
  out.unit = counit;
  out.p = Matrix<F>(k, v, total);
  if (n >= 1)
    for (std::size_t i = 0; i < v; ++i) out.p(i, offsets[1] + i) = k.one();
  out.offsets = std::move(offsets);
  if (!out.coalgebra.verified()) throw InternalConsistencyError("truncated_cofree: " + out.coalgebra.axiom_report().message());
  return out;
}

}  // namespace detail

/// Words of length <= N over a basis of V, with deconcatenation.
template <Field F>
TruncatedCofree<F> truncated_cofree(std::size_t v_dim, std::size_t n, const F& k = F{}) {
  if (v_dim == 0 || n == 0) throw PreconditionError("truncated_cofree: v_dim and N must be at least 1");
  return detail::build_cofree(v_dim, n, k);
}

template <Field F>
struct CofreeLift {
  TruncatedCofree<F> cofree;
  Morphism<Coalgebra<F>> map;  // D -> cofree.coalgebra
};

namespace detail {

template <Field F>
CofreeLift<F> lift_into(const CoaugmentedCoalgebra<F>& d, const Matrix<F>& phi, TruncatedCofree<F> cofree) {
  const F& k = d.field();
  const std::size_t n = cofree.degree_bound;
  if (phi.cols() != d.dim() || phi.rows() != cofree.v_dim) throw DimensionMismatch("lift_to_cofree: phi has the wrong shape");
  for (const auto& v : phi * d.unit)
    if (!k.is_zero(v)) throw PreconditionError("lift_to_cofree: phi(1) must be zero");
  auto reduced = reduced_coproducts(d, n + 1);
  if (reduced.back().nonzeros() > 0 || reduced.size() > n + 1)
    throw UnsupportedFragment("lift_to_cofree: '" + d.coalgebra.name() + "' has conilpotency index above " +
                              std::to_string(n));
  Matrix<F> f(k, cofree.dim(), d.dim());
  for (std::size_t j = 0; j < d.dim(); ++j) f(0, j) = d.coalgebra.counit()[j];
  auto phis = SparseMatrix<F>::from_dense(phi);
  for (std::size_t order = 1; order <= reduced.size() && order <= n; ++order) {
    auto acc = reduced[order - 1];
    std::size_t left = 1, right = 1;
    for (std::size_t i = 1; i < order; ++i) right *= d.dim();
    for (std::size_t i = 0; i < order; ++i) {
      acc = compose_on_factor(phis, left, right, acc);
      left *= cofree.v_dim;
      if (right > 1) right /= d.dim();
    }
    for (const auto& [r, c, v] : acc.triplets()) f(cofree.offsets[order] + r, c) = v;
  }
  CofreeLift<F> out{std::move(cofree), {}};
  out.map = {d.coalgebra, out.cofree.coalgebra, std::move(f), Certificate::linear_only};
  if (!(out.cofree.p * out.map.matrix == phi)) throw InternalConsistencyError("lift_to_cofree: p o f != phi");
  if (auto r = check_morphism(out.map); !r)
    throw InternalConsistencyError("lift_to_cofree: lift is not a coalgebra map (" + r.message() + ")");
  return out;
}

}  // namespace detail

/// The coalgebra map f : D -> T(V)<=N with p f = phi:
/// f(d) = eps(d) 1 + sum_k phi^(x)k delta^(k-1)(d), summed over k <= N.
template <Field F>
CofreeLift<F> lift_to_cofree(const CoaugmentedCoalgebra<F>& d, const Matrix<F>& phi, std::size_t n) {
  return detail::lift_into(d, phi, truncated_cofree(phi.rows(), n, d.field()));
}

template <Field F>
struct ConilpotentProduct {
  ProductResult<Coalgebra<F>> product;  // projections are q_i restricted to the carrier
  std::vector<CoaugmentedCoalgebra<F>> factors;
  TruncatedCofree<F> cofree;            // on V = reduced parts of the factors, in order
  Subcoalgebra<F> carrier;
  std::vector<Matrix<F>> q;             // q_i : cofree -> C_i
  std::vector<Matrix<F>> reduced_bases; // columns span ker(eps_i)
  std::vector<std::size_t> v_offsets;   // first V coordinate of each factor

  CoaugmentedCoalgebra<F> coaugmented() const {
    auto coords = carrier.carrier.coordinates(cofree.unit);
    if (!coords) throw InternalConsistencyError("conilpotent product: unit is outside the carrier");
    return CoaugmentedCoalgebra<F>::make(product.object, *coords);
  }
};

/// Product of conilpotent coalgebras, truncated at word length N.
template <Field F>
ConilpotentProduct<F> product_conilpotent(const std::vector<CoaugmentedCoalgebra<F>>& factors, std::size_t n,
                                          const F& field = F{}) {
  if (n == 0) throw PreconditionError("product_conilpotent: degree must be at least 1");
  const F& k = factors.empty() ? field : factors.front().field();
  ConilpotentProduct<F> out;
  out.factors = factors;
  std::size_t v = 0;
  std::vector<std::string> names;
  for (const auto& c : factors) {
    require_same_field(k, c.field(), "product_conilpotent");
    auto index = conilpotency_index(c);
    if (!index || *index > n)
      throw UnsupportedFragment("product_conilpotent: '" + c.coalgebra.name() + "' is not conilpotent of index <= " +
                                std::to_string(n));
    out.reduced_bases.push_back(
        Subspace<F>::kernel(Matrix<F>::from_rows(k, {c.coalgebra.counit()}, c.dim())).inclusion_matrix());
    out.v_offsets.push_back(v);
    v += out.reduced_bases.back().cols();
    names.push_back(c.coalgebra.name());
  }
  out.cofree = detail::build_cofree(v, n, k);
  const auto& kc = out.cofree.coalgebra;
  const std::size_t dim = out.cofree.dim();
  auto eps_k = Matrix<F>::from_rows(k, {kc.counit()}, dim);

  Matrix<F> constraints(k, 0, dim);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& c = factors[i];
    const auto& basis = out.reduced_bases[i];
    Matrix<F> select(k, basis.cols(), v);
    for (std::size_t j = 0; j < basis.cols(); ++j) select(j, out.v_offsets[i] + j) = k.one();
    auto q = basis * select * out.cofree.p + Matrix<F>::column(k, c.unit) * eps_k;
    auto qs = SparseMatrix<F>::from_dense(q);
    auto mult_defect = compose(c.coalgebra.delta(), qs) - tensor_compose(qs, qs, kc.delta());
    constraints = vstack(constraints, compress_rows(mult_defect));
    constraints = vstack(constraints, Matrix<F>::from_rows(k, {c.coalgebra.counit()}, c.dim()) * q - eps_k);
    out.q.push_back(std::move(q));
  }
  auto w = Subspace<F>::kernel(constraints);
  out.carrier = largest_subcoalgebra(kc, w);
  auto name = names.empty() ? std::string("k") : detail::join_names(names) + " (N=" + std::to_string(n) + ")";
  out.product.object = out.carrier.restricted.renamed(name);
  auto incl = out.carrier.carrier.inclusion_matrix();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Morphism<Coalgebra<F>> p{out.product.object, factors[i].coalgebra, out.q[i] * incl, Certificate::linear_only};
    if (!check_morphism(p)) throw InternalConsistencyError("product_conilpotent: projection is not a coalgebra map");
    out.product.projections.push_back(std::move(p));
    out.product.factor_index.emplace_back(names[i], i);
  }
  return out;
}

/// Mediating map D' -> product for a cone of coalgebra maps g_i : D' -> C_i
/// sending 1 to 1: lift phi = (g_i - 1 eps) into T(V), then factor through
/// the carrier.
template <Field F>
Morphism<Coalgebra<F>> mediate_conilpotent(const ConilpotentProduct<F>& p, const CoaugmentedCoalgebra<F>& d,
                                           const std::vector<Morphism<Coalgebra<F>>>& cone) {
  const F& k = d.field();
  if (cone.size() != p.factors.size()) throw PreconditionError("mediate_conilpotent: cone has the wrong number of legs");
  Matrix<F> phi(k, p.cofree.v_dim, d.dim());
  for (std::size_t i = 0; i < cone.size(); ++i) {
    const auto& g = cone[i];
    if (!at_least(g.certificate, Certificate::coalgebra))
      throw PreconditionError("mediate_conilpotent: leg " + std::to_string(i) + " is not a certified coalgebra map");
    if (!(g.dom == d.coalgebra) || !(g.cod == p.factors[i].coalgebra))
      throw PreconditionError("mediate_conilpotent: leg " + std::to_string(i) + " has the wrong domain or codomain");
    if (g.matrix * d.unit != p.factors[i].unit)
      throw PreconditionError("mediate_conilpotent: leg " + std::to_string(i) + " does not preserve the unit");
    auto reduced = p.factors[i].reduction() * g.matrix;
    auto basis = Subspace<F>::column_span(p.reduced_bases[i]);
    for (std::size_t j = 0; j < d.dim(); ++j) {
      auto coords = basis.coordinates(reduced.column_vector(j));
      if (!coords) throw InternalConsistencyError("mediate_conilpotent: reduction left the counit kernel");
      for (std::size_t r = 0; r < coords->size(); ++r) phi(p.v_offsets[i] + r, j) = (*coords)[r];
    }
  }
  auto lift = detail::lift_into(d, phi, p.cofree);
  auto u = factor_through_subspace(p.carrier.carrier, lift.map.matrix);
  if (!u) throw InternalConsistencyError("mediate_conilpotent: lifted cone leaves the product carrier");
  Morphism<Coalgebra<F>> theta{d.coalgebra, p.product.object, std::move(*u), Certificate::linear_only};
  if (!check_morphism(theta)) throw InternalConsistencyError("mediate_conilpotent: mediator is not a coalgebra map");
  for (std::size_t i = 0; i < cone.size(); ++i)
    if (!(p.product.projections[i].matrix * theta.matrix == cone[i].matrix))
      throw InternalConsistencyError("mediate_conilpotent: projection law fails on leg " + std::to_string(i));
  return theta;
}

/// s intersected with the words of length <= d, as a subspace of that
/// coordinate block.
template <Field F>
Subspace<F> low_degree_part(const Subspace<F>& s, const TruncatedCofree<F>& t, std::size_t d) {
  if (d > t.degree_bound) throw PreconditionError("low_degree_part: degree above the truncation");
  const std::size_t block = t.offsets[d + 1];
  Matrix<F> select(s.field(), t.dim() - block, t.dim());
  for (std::size_t i = block; i < t.dim(); ++i) select(i - block, i) = s.field().one();
  auto part = intersect(s, Subspace<F>::kernel(select));
  Matrix<F> rows(s.field(), part.dim(), block);
  for (std::size_t i = 0; i < part.dim(); ++i)
    for (std::size_t j = 0; j < block; ++j) rows(i, j) = part.basis()(i, j);
  return Subspace<F>::span(rows);
}

}  // namespace hopflim
