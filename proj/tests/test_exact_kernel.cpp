#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

TEST(Rationals, ParsesAndFormatsInLowestTerms) {
  Q k;
  EXPECT_EQ(k.format(k.parse("6/8")), "3/4");
  EXPECT_EQ(k.format(k.parse("-4/2")), "-2");
  EXPECT_EQ(k.format(k.parse(" 7 ")), "7");
  EXPECT_THROW(k.parse("1/0"), ParseError);
  EXPECT_THROW(k.parse("x"), ParseError);
}

TEST(Rationals, LargeValuesStayExact) {
  Q k;
  auto big = k.parse("123456789012345678901234567890");
  auto r = k.mul(big, k.inv(big));
  EXPECT_TRUE(k.equal(r, k.one()));
  EXPECT_EQ(k.format(k.mul(big, big)), "15241578753238836750495351562536198787501905199875019052100");
}

TEST(PrimeField, ArithmeticModP) {
  Fp k(7);
  EXPECT_EQ(k.name(), "F7");
  EXPECT_EQ(k.parse("10"), 3u);
  EXPECT_EQ(k.parse("-1"), 6u);
  EXPECT_EQ(k.parse("1/3"), 5u);  // 3 * 5 = 15 = 1
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
  EXPECT_THROW(k.parse("1/7"), ParseError);
  EXPECT_THROW(Fp(4), PreconditionError);
  EXPECT_THROW(Fp(65537), PreconditionError);
}

TEST(Fields, MismatchIsReported) {
  Matrix<Fp> a(Fp(5), 2, 2), b(Fp(7), 2, 2);
  EXPECT_THROW(a * b, FieldMismatch);
  EXPECT_THROW(a + b, FieldMismatch);
}

TEST(Matrix, ShapeMismatchIsReported) {
  Q k;
  Matrix<Q> a(k, 2, 3), b(k, 2, 3);
  EXPECT_THROW(a * b, DimensionMismatch);
  EXPECT_THROW(vstack(a, Matrix<Q>(k, 1, 2)), DimensionMismatch);
}

TEST(Matrix, RrefOfKnownMatrix) {
  Q k;
  auto m = Matrix<Q>::from_rows(k, {vec(k, {1, 2, 3}), vec(k, {2, 4, 6}), vec(k, {1, 0, 1})}, 3);
  auto e = echelon(m);
  ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.rows, Matrix<Q>::from_rows(k, {vec(k, {1, 0, 1}), vec(k, {0, 1, 1})}, 3));
  auto ker = kernel_basis(m);
  ASSERT_EQ(ker.rows(), 1u);
  EXPECT_EQ(ker.row_vector(0), vec(k, {1, 1, -1}));
}

TEST(Matrix, KernelOfZeroSizedMatrices) {
  Q k;
  EXPECT_EQ(kernel_basis(Matrix<Q>(k, 0, 3)).rows(), 3u);
  EXPECT_EQ(kernel_basis(Matrix<Q>(k, 3, 0)).rows(), 0u);
  EXPECT_EQ(rank(Matrix<Q>(k, 0, 0)), 0u);
}

template <Field F>
void check_elimination_properties(const F& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto m = testkit::random_matrix(k, r, c, rng);
    if (trial % 3 == 0 && r > 1)  // force dependent rows
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = k.add(m(0, j), m(0, j));
    auto e = echelon(m);
    auto ker = kernel_basis(m);
    EXPECT_EQ(e.pivots.size() + ker.rows(), c) << "rank-nullity";
    EXPECT_TRUE((m * transpose(ker)).is_zero());
    EXPECT_EQ(rref(e.rows), e.rows) << "rref is idempotent";
    EXPECT_EQ(rank(transpose(m)), e.pivots.size()) << "row rank = column rank";
    // row space is preserved
    EXPECT_EQ(Subspace<F>::span(m), Subspace<F>::span(e.rows));
  }
}

TEST(Matrix, EliminationPropertiesOverQ) { check_elimination_properties(Q{}, 1); }
TEST(Matrix, EliminationPropertiesOverF5) { check_elimination_properties(Fp(5), 2); }
TEST(Matrix, EliminationPropertiesOverF2) { check_elimination_properties(Fp(2), 3); }

TEST(Matrix, KroneckerMixedProduct) {
  Q k;
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto a = testkit::random_matrix(k, 2, 3, rng), b = testkit::random_matrix(k, 3, 2, rng);
    auto c = testkit::random_matrix(k, 3, 2, rng), d = testkit::random_matrix(k, 2, 3, rng);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Sparse, FactorwiseApplicationMatchesDenseKronecker) {
  Fp k(3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::size_t l = 1 + rng() % 3, r = 1 + rng() % 3, n = 1 + rng() % 3, m = 1 + rng() % 3;
    auto a = testkit::random_matrix(k, m, n, rng);
    auto x = testkit::random_matrix(k, l * n * r, 4, rng);
    auto dense = kron(kron(Matrix<Fp>::identity(k, l), a), Matrix<Fp>::identity(k, r)) * x;
    auto sparse = compose_on_factor(SparseMatrix<Fp>::from_dense(a), l, r, SparseMatrix<Fp>::from_dense(x));
    EXPECT_EQ(sparse.to_dense(), dense);
  }
}

TEST(Sparse, TensorComposeAndFlip) {
  Q k;
  std::mt19937_64 rng(6);
  auto a = testkit::random_matrix(k, 2, 3, rng), b = testkit::random_matrix(k, 3, 2, rng);
  auto x = testkit::random_matrix(k, 6, 5, rng);
  auto s = tensor_compose(SparseMatrix<Q>::from_dense(a), SparseMatrix<Q>::from_dense(b), SparseMatrix<Q>::from_dense(x));
  EXPECT_EQ(s.to_dense(), kron(a, b) * x);
  // flip(n, m) sends u (x) v to v (x) u
  auto tau = flip(k, 2, 3).to_dense();
  auto u = vec(k, {1, 2}), v = vec(k, {3, 4, 5});
  EXPECT_EQ(tau * kron(u, v, k), kron(v, u, k));
}

TEST(Sparse, CompressRowsKeepsTheKernel) {
  Q k;
  auto m = SparseMatrix<Q>::from_triplets(k, 100, 3, {{7, 0, k.one()}, {42, 1, k.one()}, {42, 2, k.one()}});
  auto d = compress_rows(m);
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(Subspace<Q>::kernel(m), Subspace<Q>::kernel(m.to_dense()));
}

TEST(Subspace, CanonicalFormMakesEqualityStructural) {
  Q k;
  auto a = Subspace<Q>::span(k, 3, {vec(k, {1, 1, 0}), vec(k, {0, 1, 1})});
  auto b = Subspace<Q>::span(k, 3, {vec(k, {1, 2, 1}), vec(k, {1, 0, -1}), vec(k, {2, 2, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
}

TEST(Subspace, CoordinatesRoundTrip) {
  Q k;
  auto s = Subspace<Q>::span(k, 4, {vec(k, {1, 2, 0, 1}), vec(k, {0, 1, 1, 3})});
  auto v = vec(k, {2, 7, 3, 11});  // 2 * first + 3 * second
  auto c = s.coordinates(v);
  ASSERT_TRUE(c);
  EXPECT_EQ(s.inclusion_matrix() * *c, v);
  EXPECT_FALSE(s.contains(vec(k, {1, 0, 0, 0})));
  EXPECT_THROW(s.coordinates(vec(k, {1, 2})), DimensionMismatch);
}

template <Field F>
void check_lattice_properties(const F& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 5;
    auto a = Subspace<F>::span(testkit::random_matrix(k, rng() % (n + 1), n, rng));
    auto b = Subspace<F>::span(testkit::random_matrix(k, rng() % (n + 1), n, rng));
    auto i = intersect(a, b), s = sum(a, b);
    EXPECT_EQ(a.dim() + b.dim(), i.dim() + s.dim()) << "Grassmann formula";
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
    EXPECT_TRUE((Matrix<F>(a.annihilator()) * a.inclusion_matrix()).is_zero());
    EXPECT_EQ(a.annihilator().rows() + a.dim(), n);
  }
}

TEST(Subspace, LatticePropertiesOverQ) { check_lattice_properties(Q{}, 7); }
TEST(Subspace, LatticePropertiesOverF3) { check_lattice_properties(Fp(3), 8); }

TEST(Subspace, ImageUnderMap) {
  Q k;
  auto m = Matrix<Q>::from_rows(k, {vec(k, {1, 0, 0}), vec(k, {0, 0, 0}), vec(k, {0, 1, 1})}, 3);
  auto s = Subspace<Q>::span(k, 3, {vec(k, {0, 1, -1})});
  EXPECT_EQ(image(m, s).dim(), 0u);
  EXPECT_EQ(image(m, Subspace<Q>::full(k, 3)).dim(), 2u);
}
