#pragma once

// Brute-force oracles and seeded instance generators. Exponential by design;
// kept out of the umbrella header.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopflim/cofree.hpp"
#include "hopflim/zoo.hpp"

namespace hopflim::testkit {

/// Number of k-dimensional subspaces of F_q^n.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

inline std::uint64_t subspace_count(std::uint64_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

/// Every subspace of F_q^n exactly once, by enumerating reduced echelon
/// forms: a pivot set plus free entries to the right of each pivot.
inline std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& k, std::size_t n) {
  const auto q = k.characteristic();
  if ((q != 2 && q != 3) || n > 4) throw PreconditionError("enumerate_subspaces: needs q in {2,3} and n <= 4");
  std::vector<Subspace<PrimeField>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) pivots.push_back(j);
    // free positions: (row r, column j) with j > pivot r and j not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = pivots[r] + 1; j < n; ++j)
        if (!(mask >> j & 1u)) free.emplace_back(r, j);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
    for (std::uint64_t c = 0; c < combos; ++c) {
      Matrix<PrimeField> m(k, pivots.size(), n);
      for (std::size_t r = 0; r < pivots.size(); ++r) m(r, pivots[r]) = k.one();
      std::uint64_t rest = c;
      for (auto [r, j] : free) {
        m(r, j) = k.from_int(static_cast<long long>(rest % q));
        rest /= q;
      }
      out.push_back(Subspace<PrimeField>::span(m));
    }
  }
  if (out.size() != subspace_count(n, q))
    throw InternalConsistencyError("enumerate_subspaces: count differs from the Gaussian binomial sum");
  return out;
}

/// Subspaces of w, obtained from the subspaces of its coordinate space.
inline std::vector<Subspace<PrimeField>> enumerate_subspaces_of(const Subspace<PrimeField>& w) {
  std::vector<Subspace<PrimeField>> out;
  for (const auto& s : enumerate_subspaces(w.field(), w.dim()))
    out.push_back(Subspace<PrimeField>::span(s.basis() * w.basis()));
  return out;
}

/// Direct test of delta(D) in D (x) D, spanning D (x) D by Kronecker products.
template <Field F>
bool is_subcoalgebra(const Coalgebra<F>& c, const Subspace<F>& d) {
  const F& k = c.field();
  std::vector<Vector<F>> pairs;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) pairs.push_back(kron(d.basis_vector(i), d.basis_vector(j), k));
  auto square = Subspace<F>::span(k, c.dim() * c.dim(), pairs);
  auto delta = c.delta().to_dense();
  for (std::size_t i = 0; i < d.dim(); ++i)
    if (!square.contains(delta * d.basis_vector(i))) return false;
  return true;
}

/// Sum of all subcoalgebras of c contained in w, by enumeration.
inline Subspace<PrimeField> brute_force_sum_of_subcoalgebras(const Coalgebra<PrimeField>& c,
                                                             const Subspace<PrimeField>& w) {
  const auto q = c.field().characteristic();
  if ((q != 2 && q != 3) || c.dim() > 4) throw PreconditionError("brute_force_sum_of_subcoalgebras: needs q in {2,3}, dim <= 4");
  auto total = Subspace<PrimeField>::zero(c.field(), c.dim());
  for (const auto& d : enumerate_subspaces_of(w))
    if (is_subcoalgebra(c, d)) total = sum(total, d);
  return total;
}

/// All x with delta x = x (x) x and eps x = 1, by scanning F_q^dim.
inline std::vector<Vector<PrimeField>> enumerate_grouplikes(const Coalgebra<PrimeField>& c) {
  const PrimeField& k = c.field();
  const std::uint64_t q = k.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    total *= q;
    if (total > (1u << 16)) throw PreconditionError("enumerate_grouplikes: q^dim exceeds 2^16");
  }
  auto delta = c.delta().to_dense();
  std::vector<Vector<PrimeField>> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector<PrimeField> x(c.dim());
    std::uint64_t rest = code;
    for (auto& v : x) {
      v = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    if (c.apply_counit(x) != k.one()) continue;
    if (delta * x == kron(x, x, k)) out.push_back(std::move(x));
  }
  return out;
}

/// Upper triangular 2 x 2 matrices, basis E11, E12, E22.
template <Field F>
FiniteAlgebra<F> upper_triangular_algebra(const F& k = F{}) {
  // e_a e_b: E11E11 = E11, E11E12 = E12, E12E22 = E12, E22E22 = E22
  return {"UT2", SparseMatrix<F>::from_triplets(k, 3, 9, {{0, 0, k.one()}, {1, 1, k.one()}, {1, 5, k.one()}, {2, 8, k.one()}}),
          {k.one(), k.zero(), k.one()}};
}

/// Small coalgebras over F_2 used for the exhaustive oracle comparison.
inline std::vector<Coalgebra<PrimeField>> curated_f2_coalgebras() {
  PrimeField k(2);
  std::vector<Coalgebra<PrimeField>> out{
      Coalgebra<PrimeField>::trivial(k),
      group_algebra(cyclic_group(2), k).coalgebra(),
      group_algebra(cyclic_group(3), k).coalgebra(),
      divided_powers(1, k),
      divided_powers(2, k),
      dual_coalgebra(product_algebra(3, k)),
      dual_coalgebra(upper_triangular_algebra(k)),
      group_algebra(cyclic_group(4), k).coalgebra(),
      group_algebra(direct_product(cyclic_group(2), cyclic_group(2)), k).coalgebra(),
      divided_powers(3, k),
      matrix_coalgebra(2, k),
      tensor_coalgebra(divided_powers(1, k), divided_powers(1, k), "DP(1)xDP(1)"),
      tensor_coalgebra(divided_powers(1, k), group_algebra(cyclic_group(2), k).coalgebra(), "DP(1)xkZ2"),
  };
  return out;
}

// Seeded generators. The same InstanceParams always yields the same instance.

enum class Family { group_algebra, dual_algebra, tensor, conilpotent };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::group_algebra: return "group-algebra";
    case Family::dual_algebra: return "dual-algebra";
    case Family::tensor: return "tensor";
    case Family::conilpotent: return "conilpotent";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (auto f : {Family::group_algebra, Family::dual_algebra, Family::tensor, Family::conilpotent})
    if (s == to_string(f)) return f;
  throw ParseError("unknown instance family '" + s + "'");
}

struct InstanceParams {
  std::uint64_t seed = 0;
  Family family = Family::group_algebra;
  std::size_t max_dim = 8;  // bound on the domain dimension
};

template <Field F>
typename F::value_type random_scalar(const F& k, std::mt19937_64& rng, long long bound = 3) {
  return k.from_int(static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
}

template <Field F>
Matrix<F> random_matrix(const F& k, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix<F> m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(k, rng);
  return m;
}

template <Field F>
using CoalgebraPair = std::pair<Morphism<Coalgebra<F>>, Morphism<Coalgebra<F>>>;

namespace detail {

inline const std::vector<GroupTable>& small_groups() {
  static const std::vector<GroupTable> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                              direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(5),
                                              cyclic_group(6), symmetric_group(3), dihedral_group(4)};
  return groups;
}

template <Field F>
Morphism<Coalgebra<F>> certified(Coalgebra<F> dom, Coalgebra<F> cod, Matrix<F> m) {
  auto f = make_morphism(std::move(dom), std::move(cod), std::move(m));
  if (auto r = check_morphism(f); !r) throw InternalConsistencyError("generator produced a non-coalgebra map: " + r.message());
  return f;
}

/// Two coalgebra maps kG -> kH from homomorphisms (or the inverse map when
/// G = H), plus the identity pair now and then.
template <Field F>
CoalgebraPair<F> group_pair(const F& k, std::mt19937_64& rng, std::size_t max_dim) {
  const auto& groups = small_groups();
  std::vector<std::size_t> fit;
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (groups[i].order() <= max_dim) fit.push_back(i);
  const auto& g = groups[fit[rng() % fit.size()]];
  const auto& h = groups[fit[rng() % fit.size()]];
  auto kg = group_algebra(g, k), kh = group_algebra(h, k);
  std::vector<Matrix<F>> maps;
  for (const auto& phi : group_homomorphisms(g, h)) maps.push_back(group_hom_morphism(kg, kh, phi).matrix);
  if (g.name() == h.name()) maps.push_back(inverse_morphism(kg).matrix);
  auto a = maps[rng() % maps.size()];
  auto b = rng() % 5 == 0 ? a : maps[rng() % maps.size()];
  return {certified(kg.coalgebra(), kh.coalgebra(), a), certified(kg.coalgebra(), kh.coalgebra(), b)};
}

template <Field F>
Matrix<F> random_invertible(const F& k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(k, n, n, rng);
    if (rank(m) == n) return m;
  }
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto r = rref(aug);
  Matrix<F> out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

/// Algebra map of M_2 given by X -> P X P^-1, as a 4 x 4 matrix on E_ij.
template <Field F>
Matrix<F> conjugation(const Matrix<F>& p) {
  const F& k = p.field();
  auto pi = inverse(p);
  Matrix<F> out(k, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix<F> e(k, 2, 2);
      e(i, j) = k.one();
      auto img = p * e * pi;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) out(a * 2 + b, i * 2 + j) = img(a, b);
    }
  return out;
}

/// Duals of algebra maps: conjugations of M_2 (on M^c(2)), or maps
/// k^m -> k^n induced by functions [n] -> [m] (on group-like coalgebras).
template <Field F>
CoalgebraPair<F> dual_pair(const F& k, std::mt19937_64& rng, std::size_t max_dim) {
  if (max_dim >= 4 && rng() % 2 == 0) {
    auto mc = matrix_coalgebra(2, k);
    auto a = transpose(conjugation(random_invertible(k, 2, rng)));
    auto b = rng() % 4 == 0 ? a : transpose(conjugation(random_invertible(k, 2, rng)));
    return {certified(mc, mc, a), certified(mc, mc, b)};
  }
  const std::size_t cap = std::min<std::size_t>(max_dim, 4);
  std::size_t m = 1 + rng() % cap, n = 1 + rng() % cap;
  auto am = product_algebra(m, k), an = product_algebra(n, k);
  auto function_map = [&] {
    // f(e_x) = sum over y with s(y) = x of e_y, for a random s : [n] -> [m]
    Matrix<F> f(k, n, m);
    for (std::size_t y = 0; y < n; ++y) f(y, rng() % m) = k.one();
    if (!check_algebra_map(am, an, f)) throw InternalConsistencyError("function map is not an algebra map");
    return f;
  };
  auto dm = dual_coalgebra(am), dn = dual_coalgebra(an);
  auto f = function_map(), g = function_map();
  return {dual_map(dn, dm, f), dual_map(dn, dm, g)};
}

/// Pairs of lifts DP(N) -> T(1)<=N of random phi with phi(t_0) = 0.
template <Field F>
CoalgebraPair<F> conilpotent_pair(const F& k, std::mt19937_64& rng, std::size_t max_dim) {
  std::size_t n = 1 + rng() % std::max<std::size_t>(1, std::min<std::size_t>(max_dim, 5) - 1);
  auto d = coaugment(divided_powers(n, k));
  auto phi = [&] {
    Matrix<F> m(k, 1, n + 1);
    for (std::size_t j = 1; j <= n; ++j) m(0, j) = random_scalar(k, rng);
    return m;
  };
  auto a = lift_to_cofree(d, phi(), n);
  auto b = rng() % 4 == 0 ? a : lift_to_cofree(d, phi(), n);
  return {a.map, b.map};
}

template <Field F>
Morphism<Coalgebra<F>> tensor_morphism(const Morphism<Coalgebra<F>>& f, const Morphism<Coalgebra<F>>& g,
                                       const Coalgebra<F>& dom, const Coalgebra<F>& cod) {
  return certified(dom, cod, kron(f.matrix, g.matrix));
}

}  // namespace detail

/// A certified parallel pair of coalgebra maps drawn from `params.family`.
template <Field F>
CoalgebraPair<F> random_parallel_pair(const InstanceParams& params, const F& k = F{}) {
  std::mt19937_64 rng(params.seed);
  switch (params.family) {
    case Family::group_algebra: return detail::group_pair(k, rng, params.max_dim);
    case Family::dual_algebra: return detail::dual_pair(k, rng, params.max_dim);
    case Family::conilpotent: return detail::conilpotent_pair(k, rng, params.max_dim);
    case Family::tensor: {
      auto first = rng() % 2 == 0 ? detail::group_pair(k, rng, 4) : detail::dual_pair(k, rng, 4);
      auto second = rng() % 2 == 0 ? detail::group_pair(k, rng, 3) : detail::conilpotent_pair(k, rng, 3);
      auto dom = tensor_coalgebra(first.first.dom, second.first.dom, first.first.dom.name() + "x" + second.first.dom.name());
      auto cod = tensor_coalgebra(first.first.cod, second.first.cod, first.first.cod.name() + "x" + second.first.cod.name());
      return {detail::tensor_morphism(first.first, second.first, dom, cod),
              detail::tensor_morphism(first.second, second.second, dom, cod)};
    }
  }
  throw PreconditionError("random_parallel_pair: unknown family");
}

/// Independent lift: f_1 = phi, f_k = (phi (x) f_(k-1)) delta, assembled
/// block by block with dense Kronecker products.
template <Field F>
Matrix<F> lift_by_recursion(const CoaugmentedCoalgebra<F>& d, const Matrix<F>& phi, std::size_t n) {
  const F& k = d.field();
  auto delta = d.coalgebra.delta().to_dense();
  std::vector<Matrix<F>> blocks{Matrix<F>::from_rows(k, {d.coalgebra.counit()}, d.dim()), phi};
  for (std::size_t order = 2; order <= n; ++order) blocks.push_back(kron(phi, blocks.back()) * delta);
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<F> out(k, rows, d.dim());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

}  // namespace hopflim::testkit
