#pragma once

// Concrete coalgebras, bialgebras and Hopf algebras: group algebras from
// multiplication tables, duals of finite algebras (comatrix coalgebras),
// Sweedler's H4, Taft algebras and divided powers.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hopflim/structures.hpp"

namespace hopflim {

class GroupTable {
 public:
  GroupTable() = default;

  /// Validates closure, associativity, identity and inverses (n <= 64).
  static GroupTable make(std::string name, std::vector<std::vector<std::size_t>> table) {
    const std::size_t n = table.size();
    if (n == 0 || n > 64) throw PreconditionError("group table: order must be between 1 and 64");
    for (const auto& row : table) {
      if (row.size() != n) throw MalformedInput("group table: rows must have length " + std::to_string(n));
      for (auto v : row)
        if (v >= n) throw MalformedInput("group table: entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw AxiomError("group table '" + name + "': associativity fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
      if (ok) e = a;
    }
    if (e == n) throw AxiomError("group table '" + name + "': no identity element");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] == e && table[b][a] == e) inverse[a] = b;
      if (inverse[a] == n) throw AxiomError("group table '" + name + "': element " + std::to_string(a) + " has no inverse");
    }
    GroupTable g;
    g.name_ = std::move(name);
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.identity_ = e;
    return g;
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

inline GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable::make("Z" + std::to_string(n), std::move(t));
}

/// G x H with (a, b) at index a * |H| + b.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order(), n = g.order() * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  return GroupTable::make(g.name() + "x" + h.name(), std::move(t));
}

/// Permutations of {0..n-1} in lexicographic order, (s t)(i) = s(t(i)).
inline GroupTable symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw PreconditionError("symmetric_group: n must be between 1 and 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      t[a][b] = index(q);
    }
  return GroupTable::make("S" + std::to_string(n), std::move(t));
}

/// Dihedral group of order 2n; r^i s^j at index j * n + i.
inline GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral_group: n must be positive");
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = ((b + d) % 2) * n + rot;
    }
  return GroupTable::make("D" + std::to_string(n), std::move(t));
}

inline bool is_group_homomorphism(const GroupTable& g, const GroupTable& h, const std::vector<std::size_t>& phi) {
  if (phi.size() != g.order()) return false;
  for (auto v : phi)
    if (v >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

/// All homomorphisms G -> H, by backtracking with the relation check on
/// every pair of already assigned elements.
inline std::vector<std::vector<std::size_t>> group_homomorphisms(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> phi(n, h.order());
  std::function<void(std::size_t)> go = [&](std::size_t a) {
    if (a == n) {
      out.push_back(phi);
      return;
    }
    for (std::size_t v = 0; v < h.order(); ++v) {
      phi[a] = v;
      bool ok = true;
      for (std::size_t x = 0; x <= a && ok; ++x)
        for (std::size_t y = 0; y <= a && ok; ++y) {
          auto p = g.mul(x, y);
          if (p <= a) ok = phi[p] == h.mul(phi[x], phi[y]);
        }
      if (ok) go(a + 1);
    }
    phi[a] = h.order();
  };
  go(0);
  return out;
}

/// kG with group-like basis, antipode g -> g^-1.
template <Field F>
HopfAlgebra<F> group_algebra(const GroupTable& t, const F& k = F{}) {
  const std::size_t n = t.order();
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> delta, mult;
  Matrix<F> antipode(k, n, n);
  Vector<F> unit(n, k.zero());
  unit[t.identity()] = k.one();
  for (std::size_t g = 0; g < n; ++g) {
    delta.emplace_back(g * n + g, g, k.one());
    antipode(t.inverse(g), g) = k.one();
    for (std::size_t h = 0; h < n; ++h) mult.emplace_back(t.mul(g, h), g * n + h, k.one());
  }
  auto c = Coalgebra<F>::make("k" + t.name(), SparseMatrix<F>::from_triplets(k, n * n, n, delta), Vector<F>(n, k.one()));
  auto b = Bialgebra<F>::make(std::move(c), SparseMatrix<F>::from_triplets(k, n, n * n, mult), std::move(unit));
  auto h = HopfAlgebra<F>::make(std::move(b), std::move(antipode));
  if (!h.verified()) throw InternalConsistencyError("group_algebra: " + h.axiom_report().message());
  return h;
}

/// Linearization of a group homomorphism, certified as a Hopf map.
template <Field F>
Morphism<HopfAlgebra<F>> group_hom_morphism(const HopfAlgebra<F>& kg, const HopfAlgebra<F>& kh,
                                            const std::vector<std::size_t>& phi) {
  if (phi.size() != kg.dim()) throw DimensionMismatch("group_hom_morphism: map has the wrong length");
  Matrix<F> m(kg.field(), kh.dim(), kg.dim());
  for (std::size_t g = 0; g < phi.size(); ++g) {
    if (phi[g] >= kh.dim()) throw PreconditionError("group_hom_morphism: image out of range");
    m(phi[g], g) = kg.field().one();
  }
  auto f = make_morphism(kg, kh, std::move(m));
  certify(f);
  return f;
}

/// g -> g^-1 on a group algebra, read off from the multiplication.
template <Field F>
Morphism<Coalgebra<F>> inverse_morphism(const HopfAlgebra<F>& h) {
  const F& k = h.field();
  const std::size_t n = h.dim();
  const auto& mult = h.bialgebra().mult();
  auto unit = to_sparse(k, h.bialgebra().unit());
  Matrix<F> m(k, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t found = n;
    for (std::size_t x = 0; x < n && found == n; ++x)
      if (mult.column(g * n + x) == unit) found = x;
    if (found == n) throw PreconditionError("inverse_morphism: basis element " + std::to_string(g) + " is not invertible");
    m(found, g) = k.one();
  }
  auto f = make_morphism(h.coalgebra(), h.coalgebra(), std::move(m));
  if (!check_morphism(f)) throw PreconditionError("inverse_morphism: not a group algebra");
  return f;
}

/// k{1, z} with z^2 = z, both group-like: a bialgebra without antipode.
template <Field F>
Bialgebra<F> monoid_bialgebra(const F& k = F{}) {
  auto c = Coalgebra<F>::make("k{1,z}", SparseMatrix<F>::from_triplets(k, 4, 2, {{0, 0, k.one()}, {3, 1, k.one()}}),
                              {k.one(), k.one()});
  auto mult = SparseMatrix<F>::from_triplets(k, 2, 4, {{0, 0, k.one()}, {1, 1, k.one()}, {1, 2, k.one()}, {1, 3, k.one()}});
  return Bialgebra<F>::make(std::move(c), std::move(mult), {k.one(), k.zero()});
}

/// Finite-dimensional algebra by structure constants: mult is dim x dim^2,
/// column i * dim + j holding e_i e_j.
template <Field F>
struct FiniteAlgebra {
  std::string name;
  SparseMatrix<F> mult;
  Vector<F> unit;

  const F& field() const { return mult.field(); }
  std::size_t dim() const { return unit.size(); }
};

template <Field F>
Report check_algebra(const FiniteAlgebra<F>& a) {
  const std::size_t n = a.dim();
  const F& k = a.field();
  if (a.mult.rows() != n || a.mult.cols() != n * n) throw MalformedInput("algebra: mult must be n x n^2");
  auto id = SparseMatrix<F>::identity(k, n);
  if (auto j = detail::first_difference(compose(a.mult, kron(a.mult, id)), compose(a.mult, kron(id, a.mult))))
    return Report::fail("associativity", j);
  auto u = SparseMatrix<F>::from_dense(Matrix<F>::column(k, a.unit));
  if (auto j = detail::first_difference(compose(a.mult, kron(u, id)), id)) return Report::fail("left unit", j);
  if (auto j = detail::first_difference(compose(a.mult, kron(id, u)), id)) return Report::fail("right unit", j);
  return Report::ok();
}

/// f o m_A = m_B o (f (x) f) and f(1) = 1.
template <Field F>
Report check_algebra_map(const FiniteAlgebra<F>& a, const FiniteAlgebra<F>& b, const Matrix<F>& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw DimensionMismatch("check_algebra_map: shape mismatch");
  auto fs = SparseMatrix<F>::from_dense(f);
  if (auto j = detail::first_difference(compose(fs, a.mult), compose(b.mult, kron(fs, fs))))
    return Report::fail("multiplicativity", j);
  if (f * a.unit != b.unit) return Report::fail("unit preservation");
  return Report::ok();
}

/// M_n(k) with E_ij at index i * n + j.
template <Field F>
FiniteAlgebra<F> matrix_algebra(std::size_t n, const F& k = F{}) {
  const std::size_t d = n * n;
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t.emplace_back(i * n + l, (i * n + j) * d + (j * n + l), k.one());
  Vector<F> unit(d, k.zero());
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = k.one();
  return {"M" + std::to_string(n), SparseMatrix<F>::from_triplets(k, d, d * d, t), std::move(unit)};
}

/// k^m with orthogonal idempotents.
template <Field F>
FiniteAlgebra<F> product_algebra(std::size_t m, const F& k = F{}) {
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (std::size_t i = 0; i < m; ++i) t.emplace_back(i, i * m + i, k.one());
  return {"k^" + std::to_string(m), SparseMatrix<F>::from_triplets(k, m, m * m, t), Vector<F>(m, k.one())};
}

/// A* with delta = transpose of mult and epsilon = evaluation at 1.
template <Field F>
Coalgebra<F> dual_coalgebra(const FiniteAlgebra<F>& a, std::string name = "") {
  if (auto r = check_algebra(a); !r) throw AxiomError("algebra '" + a.name + "': " + r.message());
  const std::size_t n = a.dim();
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (auto& [i, jk, v] : a.mult.triplets()) t.emplace_back(jk, i, v);
  return Coalgebra<F>::make(name.empty() ? a.name + "*" : std::move(name),
                            SparseMatrix<F>::from_triplets(a.field(), n * n, n, t), a.unit);
}

/// Transpose of an algebra map A -> B, a coalgebra map B* -> A*.
template <Field F>
Morphism<Coalgebra<F>> dual_map(const Coalgebra<F>& b_dual, const Coalgebra<F>& a_dual, const Matrix<F>& f) {
  auto m = make_morphism(b_dual, a_dual, transpose(f));
  check_morphism(m);
  return m;
}

/// The comatrix coalgebra M^c(n): delta e_ij = sum_k e_ik (x) e_kj.
template <Field F>
Coalgebra<F> matrix_coalgebra(std::size_t n, const F& k = F{}) {
  return dual_coalgebra(matrix_algebra(n, k), "Mc(" + std::to_string(n) + ")");
}

namespace detail {

template <Field F>
Vector<F> multiply(const SparseMatrix<F>& mult, std::size_t n, const Vector<F>& x, const Vector<F>& y) {
  const F& k = mult.field();
  Accumulator<F> acc(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (k.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (k.is_zero(y[j])) continue;
      auto s = k.mul(x[i], y[j]);
      for (const auto& [r, v] : mult.column(i * n + j)) acc.add(r, k.mul(s, v));
    }
  }
  return to_dense(k, acc.finish(), mult.rows());
}

template <Field F>
typename F::value_type power(const F& k, typename F::value_type a, std::size_t e) {
  auto r = k.one();
  for (std::size_t i = 0; i < e; ++i) r = k.mul(r, a);
  return r;
}

/// A primitive n-th root of unity, searched among the prime field elements
/// (or +-1 in characteristic zero).
template <Field F>
typename F::value_type primitive_root_of_unity(const F& k, std::size_t n) {
  std::vector<typename F::value_type> candidates;
  if (k.characteristic() == 0) {
    candidates = {k.one(), k.neg(k.one())};
  } else {
    for (std::uint64_t a = 1; a < k.characteristic(); ++a) candidates.push_back(k.from_int(static_cast<long long>(a)));
  }
  for (const auto& w : candidates) {
    if (!k.equal(power(k, w, n), k.one())) continue;
    bool primitive = true;
    for (std::size_t d = 1; d < n && primitive; ++d)
      if (k.equal(power(k, w, d), k.one())) primitive = false;
    if (primitive) return w;
  }
  throw PreconditionError("no primitive " + std::to_string(n) + "-th root of unity in " + k.name());
}

}  // namespace detail

/// Taft algebra T_n: generated by g, x with g^n = 1, x^n = 0, x g = w g x,
/// delta g = g (x) g, delta x = x (x) 1 + g (x) x. Basis g^i x^j at index
/// i * n + j. The coproduct and antipode are computed from the generators.
template <Field F>
HopfAlgebra<F> taft(std::size_t n, const F& k = F{}, std::string name = "") {
  if (n == 0) throw PreconditionError("taft: n must be positive");
  const auto w = detail::primitive_root_of_unity(k, n);
  const std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return (i % n) * n + j; };
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> mt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (j + b < n) mt.emplace_back(idx(i + a, j + b), idx(i, j) * d + idx(a, b), detail::power(k, w, j * a));
  auto mult = SparseMatrix<F>::from_triplets(k, d, d * d, mt);
  auto mult2 = tensor_mult(k, mult, d, mult, d);

  auto e = [&](std::size_t i) {
    Vector<F> v(d, k.zero());
    v[i] = k.one();
    return v;
  };
  auto g = e(idx(1, 0)), x = e(idx(0, 1)), one = e(0);
  auto dx = kron(x, one, k);
  {
    auto gx = kron(g, x, k);
    for (std::size_t i = 0; i < dx.size(); ++i) dx[i] = k.add(dx[i], gx[i]);
  }
  auto g_inv = e(idx(n - 1, 0));
  auto s_x = detail::multiply(mult, d, g_inv, x);
  for (auto& v : s_x) v = k.neg(v);

  std::vector<SparseVec<F>> delta_cols(d);
  Matrix<F> antipode(k, d, d);
  Vector<F> counit(d, k.zero());
  for (std::size_t i = 0; i < n; ++i) {
    auto gi = e(idx(i, 0));
    auto dgi = kron(gi, gi, k);
    Vector<F> s_gi = e(idx(n - i, 0));
    Vector<F> dxj = kron(one, one, k), s_xj = one;
    for (std::size_t j = 0; j < n; ++j) {
      delta_cols[idx(i, j)] = to_sparse(k, detail::multiply(mult2, d * d, dgi, dxj));
      auto s = detail::multiply(mult, d, s_xj, s_gi);
      for (std::size_t r = 0; r < d; ++r) antipode(r, idx(i, j)) = s[r];
      dxj = detail::multiply(mult2, d * d, dxj, dx);
      s_xj = detail::multiply(mult, d, s_x, s_xj);
    }
    counit[idx(i, 0)] = k.one();
  }
  if (name.empty()) name = "T" + std::to_string(n);
  auto c = Coalgebra<F>::make(std::move(name), SparseMatrix<F>::from_columns(k, d * d, std::move(delta_cols)),
                              std::move(counit));
  auto b = Bialgebra<F>::make(std::move(c), std::move(mult), e(0));
  auto h = HopfAlgebra<F>::make(std::move(b), std::move(antipode));
  if (!h.verified()) throw InternalConsistencyError("taft: " + h.axiom_report().message());
  if (n <= 4 && n >= 2) {
    auto id = Matrix<F>::identity(k, d);
    Matrix<F> p = h.antipode();
    std::size_t order = 1;
    while (!(p == id) && order <= 2 * n) {
      p = p * h.antipode();
      ++order;
    }
    if (order != 2 * n) throw InternalConsistencyError("taft: antipode order is not 2n");
  }
  return h;
}

/// Sweedler's H4 on {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx,
/// delta x = x (x) 1 + g (x) x, S(x) = -gx.
template <Field F>
HopfAlgebra<F> sweedler_h4(const F& k = F{}) {
  if (k.characteristic() == 2) throw PreconditionError("sweedler_h4: characteristic 2 is not allowed");
  const auto one = k.one(), m1 = k.neg(k.one());
  // basis: 0 = 1, 1 = g, 2 = x, 3 = gx
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> mt;
  auto put = [&](std::size_t a, std::size_t b, std::size_t r, typename F::value_type v) { mt.emplace_back(r, a * 4 + b, v); };
  for (std::size_t b = 0; b < 4; ++b) put(0, b, b, one);
  put(1, 0, 1, one), put(1, 1, 0, one), put(1, 2, 3, one), put(1, 3, 2, one);
  put(2, 0, 2, one), put(2, 1, 3, m1);
  put(3, 0, 3, one), put(3, 1, 2, m1);
  auto mult = SparseMatrix<F>::from_triplets(k, 4, 16, mt);
  auto delta = SparseMatrix<F>::from_triplets(
      k, 16, 4,
      {{0, 0, one}, {1 * 4 + 1, 1, one}, {2 * 4 + 0, 2, one}, {1 * 4 + 2, 2, one}, {3 * 4 + 1, 3, one}, {0 * 4 + 3, 3, one}});
  auto c = Coalgebra<F>::make("H4", std::move(delta), {one, one, k.zero(), k.zero()});
  auto b = Bialgebra<F>::make(std::move(c), std::move(mult), {one, k.zero(), k.zero(), k.zero()});
  auto s = Matrix<F>::from_triplets(k, 4, 4, {{0, 0, one}, {1, 1, one}, {3, 2, m1}, {2, 3, one}});
  auto h = HopfAlgebra<F>::make(std::move(b), std::move(s));
  if (!h.verified()) throw InternalConsistencyError("sweedler_h4: " + h.axiom_report().message());
  return h;
}

/// t_0..t_N with delta t_n = sum_i t_i (x) t_{n-i}, epsilon t_n = [n = 0].
template <Field F>
Coalgebra<F> divided_powers(std::size_t n, const F& k = F{}) {
  const std::size_t d = n + 1;
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t i = 0; i <= m; ++i) t.emplace_back(i * d + (m - i), m, k.one());
  Vector<F> counit(d, k.zero());
  counit[0] = k.one();
  return Coalgebra<F>::make("DP(" + std::to_string(n) + ")", SparseMatrix<F>::from_triplets(k, d * d, d, t),
                            std::move(counit));
}

}  // namespace hopflim
