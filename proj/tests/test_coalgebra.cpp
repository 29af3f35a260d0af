#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

namespace {

// k{a, b} with delta a = a (x) b: coassociative, but the counit fails on a.
Coalgebra<Q> broken_counit() {
  Q k;
  auto delta = SparseMatrix<Q>::from_triplets(k, 4, 2, {{1, 0, k.one()}, {3, 1, k.one()}});
  return Coalgebra<Q>::make("broken", delta, {k.one(), k.one()});
}

}  // namespace

TEST(Coalgebra, TrivialAndNull) {
  Q k;
  auto t = Coalgebra<Q>::trivial(k);
  EXPECT_TRUE(t.verified());
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_TRUE(t.cocommutative());
  auto z = Coalgebra<Q>::null(k);
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_TRUE(z.verified());
}

TEST(Coalgebra, ReportsTheFailingIdentityAndBasisIndex) {
  auto c = broken_counit();
  EXPECT_FALSE(c.verified());
  EXPECT_FALSE(c.axiom_report().identity.empty());
  EXPECT_TRUE(c.axiom_report().basis_index.has_value());
  EXPECT_THROW(c.require_verified("test"), AxiomError);
}

TEST(Coalgebra, CounitFailureIsNamed) {
  Q k;
  auto delta = SparseMatrix<Q>::from_triplets(k, 1, 1, {{0, 0, k.one()}});
  auto c = Coalgebra<Q>::make("bad-counit", delta, {k.from_int(2)});
  ASSERT_FALSE(c.verified());
  EXPECT_NE(c.axiom_report().identity.find("counit"), std::string::npos) << c.axiom_report().message();
}

TEST(Coalgebra, MalformedShapesAreRejected) {
  Q k;
  auto delta = SparseMatrix<Q>::from_triplets(k, 3, 2, {});
  EXPECT_THROW(Coalgebra<Q>::make("x", delta, {k.one(), k.one()}), MalformedInput);
  EXPECT_THROW(Coalgebra<Q>::make("x", SparseMatrix<Q>::from_triplets(k, 4, 2, {}), {k.one()}), MalformedInput);
}

TEST(Coalgebra, CocommutativityDetection) {
  Q k;
  EXPECT_TRUE(group_algebra(symmetric_group(3), k).cocommutative());
  EXPECT_FALSE(matrix_coalgebra(2, k).cocommutative());
  EXPECT_FALSE(sweedler_h4(k).cocommutative());
  EXPECT_TRUE(divided_powers(3, k).cocommutative());
}

TEST(Coalgebra, StructuralEqualityIgnoresHandles) {
  Q k;
  EXPECT_EQ(divided_powers(2, k), divided_powers(2, k));
  EXPECT_FALSE(divided_powers(2, k) == divided_powers(3, k));
  EXPECT_EQ(divided_powers(2, k), divided_powers(2, k).renamed("other"));  // names are labels only
}

TEST(Coalgebra, CoalgebraMapChecks) {
  Fp k(3);
  auto c = divided_powers(2, k);
  auto good = make_morphism(c, c, Matrix<Fp>::identity(k, 3));
  EXPECT_TRUE(certify(good).pass);
  EXPECT_EQ(good.certificate, Certificate::coalgebra);
  // t_n -> 2^n t_n is a coalgebra map of divided powers
  auto scale = Matrix<Fp>::from_triplets(k, 3, 3, {{0, 0, 1u}, {1, 1, 2u}, {2, 2, 1u}});
  auto s = make_morphism(c, c, scale);
  EXPECT_TRUE(certify(s).pass);
  // t_n -> 2 t_n is not
  auto bad = make_morphism(c, c, Matrix<Fp>::from_triplets(k, 3, 3, {{0, 0, 2u}, {1, 1, 2u}, {2, 2, 2u}}));
  auto r = certify(bad);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(bad.certificate, Certificate::linear_only);
  EXPECT_FALSE(r.identity.empty());
}

TEST(Coalgebra, IteratedCoproductOfDividedPowers) {
  Q k;
  auto c = divided_powers(2, k);
  auto d3 = iterated_delta(c, 3).to_dense();
  // delta^(2) t_2 has one term per composition of 2 into 3 parts: 6 terms
  std::size_t terms = 0;
  for (std::size_t r = 0; r < d3.rows(); ++r) terms += !k.is_zero(d3(r, 2));
  EXPECT_EQ(terms, 6u);
  EXPECT_EQ(iterated_delta(c, 1), SparseMatrix<Q>::identity(k, 3));
  EXPECT_THROW(iterated_delta(c, 0), PreconditionError);
}

TEST(LargestSubcoalgebra, KnownCases) {
  Q k;
  auto kg = group_algebra(cyclic_group(4), k).coalgebra();
  // span{e0 + e1, e2}: only e2 spans a subcoalgebra inside it
  auto w = Subspace<Q>::span(k, 4, {vec(k, {1, 1, 0, 0}), vec(k, {0, 0, 1, 0})});
  auto sub = largest_subcoalgebra(kg, w);
  EXPECT_EQ(sub.carrier, span_of_elements(k, 4, {2}));
  EXPECT_TRUE(sub.restricted.verified());
  EXPECT_EQ(sub.inclusion.certificate, Certificate::coalgebra);

  auto dp = divided_powers(3, k);
  // the subcoalgebras of DP(3) are the truncations span{t_0..t_m}
  auto w2 = Subspace<Q>::span(k, 4, {vec(k, {1, 0, 0, 0}), vec(k, {0, 1, 0, 0}), vec(k, {0, 0, 0, 1})});
  EXPECT_EQ(largest_subcoalgebra(dp, w2).carrier.dim(), 2u);
  EXPECT_EQ(largest_subcoalgebra(dp, Subspace<Q>::full(k, 4)).carrier.dim(), 4u);
  EXPECT_EQ(largest_subcoalgebra(dp, Subspace<Q>::zero(k, 4)).carrier.dim(), 0u);
}

TEST(LargestSubcoalgebra, RejectsForeignSubspaces) {
  Q k;
  auto c = divided_powers(2, k);
  EXPECT_THROW(largest_subcoalgebra(c, Subspace<Q>::full(k, 4)), DimensionMismatch);
  EXPECT_THROW(largest_subcoalgebra(broken_counit(), Subspace<Q>::full(k, 2)), AxiomError);
}

// Property: the result is a subcoalgebra inside W, idempotent, and monotone.
template <Field F>
void check_largest_subcoalgebra_properties(const F& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Coalgebra<F>> pool{group_algebra(cyclic_group(3), k).coalgebra(), divided_powers(3, k),
                                 matrix_coalgebra(2, k), dual_coalgebra(product_algebra(3, k)),
                                 dual_coalgebra(testkit::upper_triangular_algebra(k))};
  for (int t = 0; t < 60; ++t) {
    const auto& c = pool[rng() % pool.size()];
    const std::size_t n = c.dim();
    auto w = Subspace<F>::span(testkit::random_matrix(k, rng() % (n + 1), n, rng));
    auto w_small = intersect(w, Subspace<F>::span(testkit::random_matrix(k, rng() % (n + 1), n, rng)));
    auto d = largest_subcoalgebra(c, w);
    EXPECT_TRUE(w.contains(d.carrier));
    EXPECT_TRUE(testkit::is_subcoalgebra(c, d.carrier));
    EXPECT_EQ(largest_subcoalgebra(c, d.carrier).carrier, d.carrier);
    EXPECT_TRUE(d.carrier.contains(largest_subcoalgebra(c, w_small).carrier));
    EXPECT_LE(d.iterations, n + 1);
  }
}

TEST(LargestSubcoalgebra, PropertiesOverQ) { check_largest_subcoalgebra_properties(Q{}, 11); }
TEST(LargestSubcoalgebra, PropertiesOverF3) { check_largest_subcoalgebra_properties(Fp(3), 12); }

TEST(Subcoalgebra, RestrictionRejectsNonSubcoalgebras) {
  Q k;
  auto c = divided_powers(2, k);
  auto s = Subspace<Q>::span(k, 3, {vec(k, {0, 0, 1})});
  EXPECT_FALSE(restrict_coalgebra(c, s, "t2").has_value());
  EXPECT_THROW(make_subcoalgebra(c, s), InternalConsistencyError);
}
