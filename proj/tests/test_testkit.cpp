#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

TEST(Enumeration, GaussianBinomials) {
  EXPECT_EQ(testkit::gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(testkit::gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(testkit::gaussian_binomial(5, 0, 2), 1u);
  EXPECT_EQ(testkit::subspace_count(3, 2), 16u);
  EXPECT_EQ(testkit::subspace_count(4, 2), 67u);
  EXPECT_EQ(testkit::subspace_count(3, 3), 28u);
}

TEST(Enumeration, SubspacesAreDistinctAndComplete) {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 0; n <= 3; ++n) {
      auto all = testkit::enumerate_subspaces(Fp(q), n);
      EXPECT_EQ(all.size(), testkit::subspace_count(n, q));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) ASSERT_FALSE(all[i] == all[j]);
    }
  EXPECT_THROW(testkit::enumerate_subspaces(Fp(5), 2), PreconditionError);
}

TEST(Enumeration, SubspacesOfASubspace) {
  Fp k(2);
  auto w = Subspace<Fp>::span(k, 4, {vec(k, {1, 1, 0, 0}), vec(k, {0, 0, 1, 1})});
  auto subs = testkit::enumerate_subspaces_of(w);
  EXPECT_EQ(subs.size(), 5u);  // 0, three lines, w
  for (const auto& s : subs) EXPECT_TRUE(w.contains(s));
}

TEST(Oracle, CuratedCoalgebrasAreValid) {
  auto cs = testkit::curated_f2_coalgebras();
  EXPECT_EQ(cs.size(), 13u);
  for (const auto& c : cs) {
    EXPECT_TRUE(c.verified()) << c.name();
    EXPECT_LE(c.dim(), 4u);
  }
}

TEST(Oracle, LargestSubcoalgebraMatchesBruteForceOverF2) {
  // Exhaustive: every subspace W of every curated coalgebra.
  std::size_t compared = 0;
  for (const auto& c : testkit::curated_f2_coalgebras())
    for (const auto& w : testkit::enumerate_subspaces(c.field(), c.dim())) {
      ASSERT_EQ(largest_subcoalgebra(c, w).carrier, testkit::brute_force_sum_of_subcoalgebras(c, w)) << c.name();
      ++compared;
    }
  EXPECT_GT(compared, 400u);
}

TEST(Oracle, LargestSubcoalgebraMatchesBruteForceOverF3) {
  Fp k(3);
  std::vector<Coalgebra<Fp>> cs{group_algebra(cyclic_group(3), k).coalgebra(), divided_powers(2, k),
                                dual_coalgebra(testkit::upper_triangular_algebra(k)),
                                group_algebra(cyclic_group(2), k).coalgebra()};
  for (const auto& c : cs)
    for (const auto& w : testkit::enumerate_subspaces(k, c.dim()))
      ASSERT_EQ(largest_subcoalgebra(c, w).carrier, testkit::brute_force_sum_of_subcoalgebras(c, w)) << c.name();
}

TEST(Oracle, SubcoalgebraPredicate) {
  Fp k(2);
  auto c = divided_powers(2, k);
  EXPECT_TRUE(testkit::is_subcoalgebra(c, span_of_elements(k, 3, {0, 1})));
  EXPECT_FALSE(testkit::is_subcoalgebra(c, span_of_elements(k, 3, {0, 2})));
  EXPECT_TRUE(testkit::is_subcoalgebra(c, Subspace<Fp>::zero(k, 3)));
}

TEST(Oracle, GroupLikesOfGroupAlgebras) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    Fp k(q);
    EXPECT_EQ(testkit::enumerate_grouplikes(group_algebra(cyclic_group(3), k).coalgebra()).size(), 3u);
    EXPECT_EQ(testkit::enumerate_grouplikes(group_algebra(symmetric_group(3), k).coalgebra()).size(), 6u);
  }
}

TEST(Generators, FamiliesRoundTripThroughNames) {
  for (auto f : {testkit::Family::group_algebra, testkit::Family::dual_algebra, testkit::Family::tensor,
                 testkit::Family::conilpotent})
    EXPECT_EQ(testkit::parse_family(testkit::to_string(f)), f);
  EXPECT_THROW(testkit::parse_family("nope"), ParseError);
}

TEST(Generators, PairsAreCertifiedAndParallel) {
  for (auto f : {testkit::Family::group_algebra, testkit::Family::dual_algebra, testkit::Family::tensor,
                 testkit::Family::conilpotent})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto [a, b] = testkit::random_parallel_pair({seed, f, 8}, Fp(3));
      EXPECT_EQ(a.certificate, Certificate::coalgebra);
      EXPECT_EQ(b.certificate, Certificate::coalgebra);
      EXPECT_EQ(a.dom, b.dom);
      EXPECT_EQ(a.cod, b.cod);
    }
}

TEST(Generators, RandomScalarsAreDeterministic) {
  std::mt19937_64 a(9), b(9);
  Q k;
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(k.equal(testkit::random_scalar(k, a), testkit::random_scalar(k, b)));
}
