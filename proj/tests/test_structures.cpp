#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

TEST(Bialgebra, GroupAlgebrasPassAllAxioms) {
  Q k;
  for (const auto& g : {cyclic_group(5), symmetric_group(3), dihedral_group(4)}) {
    auto h = group_algebra(g, k);
    EXPECT_TRUE(check_bialgebra(h.bialgebra()).pass) << g.name();
    EXPECT_TRUE(check_hopf(h).pass) << g.name();
  }
}

TEST(Bialgebra, BrokenMultiplicationIsReported) {
  Q k;
  auto kz2 = group_algebra(cyclic_group(2), k);
  // g * g = 0 breaks multiplicativity of the counit
  auto mult = SparseMatrix<Q>::from_triplets(k, 2, 4, {{0, 0, k.one()}, {1, 1, k.one()}, {1, 2, k.one()}});
  auto b = Bialgebra<Q>::make(kz2.coalgebra(), mult, kz2.bialgebra().unit());
  EXPECT_FALSE(b.verified());
  EXPECT_THROW(b.require_verified("test"), AxiomError);
  // a non-unital unit
  auto b2 = Bialgebra<Q>::make(kz2.coalgebra(), kz2.bialgebra().mult(), vec(k, {0, 1}));
  ASSERT_FALSE(b2.verified());
  EXPECT_EQ(b2.axiom_report().identity, "left unit");
}

TEST(Bialgebra, MonoidHasNoAntipode) {
  Q k;
  auto b = monoid_bialgebra(k);
  EXPECT_TRUE(b.verified());
  // S must fix the group-likes 1 and z; then z S(z) = z != 1 for any choice
  auto h = HopfAlgebra<Q>::make(b, Matrix<Q>::identity(k, 2));
  EXPECT_FALSE(h.verified());
  auto core = antipode_core(b, Matrix<Q>::identity(k, 2));
  EXPECT_EQ(core.core.carrier, span_of_elements(k, 2, {0}));
  EXPECT_FALSE(core.full());
  EXPECT_TRUE(core.closure.mult_closed);
  EXPECT_TRUE(core.closure.unit_in);
  EXPECT_TRUE(core.closure.antipode_stable);
}

TEST(Hopf, WrongAntipodeIsNamed) {
  Q k;
  auto kz3 = group_algebra(cyclic_group(3), k);
  auto h = HopfAlgebra<Q>::make(kz3.bialgebra(), Matrix<Q>::identity(k, 3));
  ASSERT_FALSE(h.verified());
  EXPECT_EQ(h.axiom_report().identity, "left antipode");
  EXPECT_EQ(h.axiom_report().basis_index, std::optional<std::size_t>(1));
}

TEST(Hopf, AntipodeIsAnOpCopMap) {
  Q k;
  for (auto h : {sweedler_h4(k), group_algebra(symmetric_group(3), k), taft(2, Q{})}) {
    auto oc = op_cop(h);
    EXPECT_TRUE(oc.verified()) << h.name();
    auto s = make_morphism(oc.bialgebra(), h.bialgebra(), h.antipode());
    EXPECT_TRUE(certify(s).pass) << h.name();
  }
}

TEST(Hopf, MapsCommuteWithAntipodes) {
  Q k;
  auto s3 = symmetric_group(3), z2 = cyclic_group(2);
  auto ks3 = group_algebra(s3, k), kz2 = group_algebra(z2, k);
  for (const auto& phi : group_homomorphisms(s3, z2)) {
    auto f = group_hom_morphism(ks3, kz2, phi);
    EXPECT_EQ(f.certificate, Certificate::hopf);
    EXPECT_EQ(f.matrix * ks3.antipode(), kz2.antipode() * f.matrix);
  }
  // a coalgebra map that is not multiplicative
  Matrix<Q> swap(k, 2, 2);
  swap(0, 1) = swap(1, 0) = k.one();
  auto f = make_morphism(kz2, kz2, swap);
  EXPECT_FALSE(certify(f).pass);
  EXPECT_EQ(f.certificate, Certificate::coalgebra);
}

TEST(Convolution, IdentityAndAntipodeRelations) {
  Fp k(5);
  auto h = sweedler_h4(k);
  auto id = Matrix<Fp>::identity(k, 4);
  auto e = unit_counit(h.bialgebra());
  EXPECT_EQ(convolve(h.coalgebra(), h.bialgebra(), h.antipode(), id), e);
  EXPECT_EQ(convolve(h.coalgebra(), h.bialgebra(), id, h.antipode()), e);
  // eta eps is the convolution unit
  EXPECT_EQ(convolve(h.coalgebra(), h.bialgebra(), e, id), id);
  EXPECT_THROW(convolve(h.coalgebra(), h.bialgebra(), Matrix<Fp>::identity(k, 3), id), DimensionMismatch);
}

TEST(AntipodeCore, FullForGenuineAntipodes) {
  Q k;
  for (auto h : {sweedler_h4(k), group_algebra(dihedral_group(3), k), taft(2, Q{})}) {
    auto core = antipode_core(h.bialgebra(), h.antipode());
    EXPECT_TRUE(core.full()) << h.name();
    EXPECT_TRUE(core.closure.mult_closed && core.closure.unit_in && core.closure.antipode_stable);
  }
}

TEST(AntipodeCore, CandidateMapsOnGroupAlgebras) {
  // On kG the core of a map S that sends g -> g^-1 for g in a subset is
  // spanned by those g; the closure flags then say whether the subset is a
  // subgroup.
  Q k;
  auto g = cyclic_group(4);
  auto h = group_algebra(g, k);
  Matrix<Q> s(k, 4, 4);
  for (std::size_t x : {0u, 2u}) s(g.inverse(x), x) = k.one();
  auto core = antipode_core(h.bialgebra(), s);
  EXPECT_EQ(core.core.carrier, span_of_elements(k, 4, {0, 2}));
  EXPECT_TRUE(core.closure.mult_closed);
  Matrix<Q> s2(k, 4, 4);
  for (std::size_t x : {0u, 1u}) s2(g.inverse(x), x) = k.one();
  auto core2 = antipode_core(h.bialgebra(), s2);
  EXPECT_EQ(core2.core.carrier, span_of_elements(k, 4, {0, 1}));
  EXPECT_FALSE(core2.closure.mult_closed);
}

TEST(Restriction, SubHopfAlgebraOfGroupAlgebra) {
  Q k;
  auto h = group_algebra(cyclic_group(6), k);
  auto sub = make_subcoalgebra(h.coalgebra(), span_of_elements(k, 6, {0, 2, 4}));
  ClosureReport closure;
  auto r = restrict_hopf(h, sub, closure);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->verified());
  EXPECT_EQ(r->dim(), 3u);
  auto sub2 = make_subcoalgebra(h.coalgebra(), span_of_elements(k, 6, {0, 1}));
  EXPECT_FALSE(restrict_hopf(h, sub2, closure).has_value());
  EXPECT_FALSE(closure.mult_closed);
}

TEST(TensorMult, ComponentwiseProductOfGroupAlgebras) {
  Q k;
  auto a = group_algebra(cyclic_group(2), k), b = group_algebra(cyclic_group(3), k);
  auto ab = group_algebra(direct_product(cyclic_group(2), cyclic_group(3)), k);
  EXPECT_EQ(tensor_mult(k, a.bialgebra().mult(), 2, b.bialgebra().mult(), 3), ab.bialgebra().mult());
}
