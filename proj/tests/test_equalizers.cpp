#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

namespace {

template <Field F>
Morphism<Coalgebra<F>> coalgebra_map(const Coalgebra<F>& dom, const Coalgebra<F>& cod, const Matrix<F>& m) {
  return certified(dom, cod, m);
}

}  // namespace

TEST(Equalizer, InverseMapOnCyclicGroup) {
  Q k;
  auto h = group_algebra(cyclic_group(4), k);
  auto id = identity_of(h.coalgebra());
  auto inv = inverse_morphism(h);
  auto eq = equalizer_remark1(id, inv);
  EXPECT_EQ(eq.carrier.carrier, span_of_elements(k, 4, {0, 2}));
  EXPECT_TRUE(eq.cross_checked);
  EXPECT_TRUE(eq.object.verified());
  EXPECT_EQ(eq.inclusion.certificate, Certificate::coalgebra);
}

TEST(Equalizer, AgreementSetCanBeLargerThanTheEqualizer) {
  Q k;
  auto c = group_algebra(cyclic_group(2), k).coalgebra();
  Matrix<Q> swap(k, 2, 2);
  swap(0, 1) = swap(1, 0) = k.one();
  auto f = identity_of(c), g = coalgebra_map(c, c, swap);
  EXPECT_EQ(agreement_subspace(f.matrix, g.matrix).dim(), 1u);  // e0 + e1
  auto eq = equalize(f, g);
  EXPECT_EQ(eq.carrier.carrier.dim(), 0u);
  EXPECT_EQ(eq.object.dim(), 0u);
}

TEST(Equalizer, EqualMapsGiveTheWholeDomain) {
  Fp k(3);
  auto c = matrix_coalgebra(2, k);
  auto f = identity_of(c);
  auto eq = equalize(f, f);
  EXPECT_EQ(eq.carrier.carrier.dim(), 4u);
}

TEST(Equalizer, MethodsAgreeOnGeneratedPairs) {
  for (auto family : {testkit::Family::group_algebra, testkit::Family::dual_algebra, testkit::Family::tensor,
                      testkit::Family::conilpotent}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      testkit::InstanceParams params{seed, family, 8};
      auto q = testkit::random_parallel_pair(params, Q{});
      auto t1 = equalize(q.first, q.second, EqualizerMethod::theorem1, false);
      auto r1 = equalize(q.first, q.second, EqualizerMethod::remark1, false);
      EXPECT_EQ(t1.carrier.carrier, r1.carrier.carrier) << to_string(family) << " seed " << seed;
      auto f5 = testkit::random_parallel_pair(params, Fp(5));
      EXPECT_NO_THROW(equalize(f5.first, f5.second)) << to_string(family) << " seed " << seed;
    }
  }
}

TEST(Equalizer, GeneratorsAreDeterministic) {
  testkit::InstanceParams params{42, testkit::Family::tensor, 8};
  auto a = testkit::random_parallel_pair(params, Q{}), b = testkit::random_parallel_pair(params, Q{});
  EXPECT_EQ(a.first.matrix, b.first.matrix);
  EXPECT_EQ(a.second.matrix, b.second.matrix);
  EXPECT_EQ(a.first.dom, b.first.dom);
}

TEST(Equalizer, UniversalPropertyFactorsCones) {
  Q k;
  auto z2 = cyclic_group(2), z4 = cyclic_group(4);
  auto kz2 = group_algebra(z2, k), kz4 = group_algebra(z4, k);
  auto id = identity_of(kz4.coalgebra());
  auto inv = inverse_morphism(kz4);
  auto eq = equalize(id, inv);
  // 1 -> 2 lands among the self-inverse elements
  auto h = as_coalgebra_morphism(group_hom_morphism(kz2, kz4, {0, 2}));
  auto u = factor_through(eq, h);
  EXPECT_EQ(u.certificate, Certificate::coalgebra);
  EXPECT_EQ(eq.inclusion.matrix * u.matrix, h.matrix);
  // a cone that does not equalize is refused
  auto bad = as_coalgebra_morphism(group_hom_morphism(kz4, kz4, {0, 1, 2, 3}));
  EXPECT_THROW(factor_through(eq, bad), PreconditionError);
}

TEST(Equalizer, FactorizationIsUniqueByInjectivity) {
  Fp k(3);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    auto q = testkit::random_parallel_pair({static_cast<std::uint64_t>(t), testkit::Family::group_algebra, 8}, k);
    auto eq = equalize(q.first, q.second);
    EXPECT_EQ(rank(eq.inclusion.matrix), eq.carrier.carrier.dim());
    // the inclusion itself factors as the identity
    auto u = factor_through(eq, eq.inclusion);
    EXPECT_EQ(u.matrix, Matrix<Fp>::identity(k, eq.object.dim()));
  }
}

TEST(Equalizer, PreconditionsAreEnforced) {
  Q k;
  auto a = group_algebra(cyclic_group(2), k).coalgebra(), b = group_algebra(cyclic_group(3), k).coalgebra();
  auto f = identity_of(a), g = identity_of(b);
  EXPECT_THROW(equalize(f, g), PreconditionError);
  auto raw = make_morphism(a, a, Matrix<Q>::identity(k, 2));
  EXPECT_THROW(equalize(raw, f), PreconditionError);
}

TEST(Equalizer, HopfLevelSweedler) {
  Q k;
  auto h = sweedler_h4(k);
  auto id = identity_of(h);
  auto s2 = certified(h, h, h.antipode() * h.antipode());
  auto eq = equalizer_hopf(id, s2);
  EXPECT_EQ(eq.carrier.carrier, span_of_elements(k, 4, {0, 1}));
  ASSERT_TRUE(eq.closure.has_value());
  EXPECT_TRUE(eq.closure->mult_closed);
  EXPECT_TRUE(eq.closure->unit_in);
  EXPECT_TRUE(eq.closure->antipode_stable);
  EXPECT_TRUE(eq.object.verified());
  EXPECT_EQ(eq.inclusion.certificate, Certificate::hopf);
}

TEST(Equalizer, BialgebraLevelGroupHoms) {
  // Equalizer of two group homomorphisms is k of the equalizing subgroup.
  Q k;
  auto s3 = symmetric_group(3), z2 = cyclic_group(2);
  auto ks3 = group_algebra(s3, k), kz2 = group_algebra(z2, k);
  auto homs = group_homomorphisms(s3, z2);
  ASSERT_EQ(homs.size(), 2u);  // trivial and sign
  auto f = as_bialgebra_morphism(group_hom_morphism(ks3, kz2, homs[0]));
  auto g = as_bialgebra_morphism(group_hom_morphism(ks3, kz2, homs[1]));
  auto eq = equalizer_bialg(f, g);
  std::vector<std::size_t> agree;
  for (std::size_t x = 0; x < 6; ++x)
    if (homs[0][x] == homs[1][x]) agree.push_back(x);
  EXPECT_EQ(agree.size(), 3u);
  EXPECT_EQ(eq.carrier.carrier, span_of_elements(k, 6, agree));
  EXPECT_TRUE(eq.object.verified());
}

TEST(Equalizer, TaftAntipodeSquare) {
  // S^2 on T_3 is conjugation by g; the equalizer with id is k<g>.
  Fp k(7);
  auto h = taft(3, k);
  auto s2 = certified(h, h, h.antipode() * h.antipode());
  auto eq = equalizer_hopf(identity_of(h), s2);
  EXPECT_EQ(eq.carrier.carrier, span_of_elements(k, 9, {0, 3, 6}));
  EXPECT_TRUE(eq.object.verified());
}
