#include "support.hpp"

using namespace hopflim;
using namespace hopflim::test;

TEST(Groups, BuildersProduceGroupsOfTheRightOrder) {
  EXPECT_EQ(cyclic_group(6).order(), 6u);
  EXPECT_EQ(symmetric_group(3).order(), 6u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(dihedral_group(4).order(), 8u);
  auto g = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.name(), "Z2xZ3");
  EXPECT_EQ(g.element_order(1 * 3 + 1), 6u);  // (1, 1) generates
}

TEST(Groups, CommutativityAndElementOrders) {
  auto s3 = symmetric_group(3);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  EXPECT_FALSE(abelian);
  std::vector<std::size_t> orders;
  for (std::size_t a = 0; a < 6; ++a) orders.push_back(s3.element_order(a));
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3, 3}));
  auto d4 = dihedral_group(4);
  EXPECT_EQ(d4.element_order(1), 4u);  // r
  EXPECT_EQ(d4.element_order(4), 2u);  // s
}

TEST(Groups, InvalidTablesAreRejected) {
  EXPECT_THROW(GroupTable::make("bad", {{0, 1}, {1, 1}}), AxiomError);
  EXPECT_THROW(GroupTable::make("bad", {{0, 1}, {1}}), MalformedInput);
  EXPECT_THROW(GroupTable::make("bad", {{0, 2}, {1, 0}}), MalformedInput);
  EXPECT_THROW(GroupTable::make("empty", {}), PreconditionError);
  EXPECT_NO_THROW(GroupTable::make("Z2", {{0, 1}, {1, 0}}));
}

TEST(Groups, HomomorphismCounts) {
  EXPECT_EQ(group_homomorphisms(cyclic_group(4), cyclic_group(2)).size(), 2u);
  EXPECT_EQ(group_homomorphisms(cyclic_group(6), cyclic_group(6)).size(), 6u);
  EXPECT_EQ(group_homomorphisms(symmetric_group(3), cyclic_group(3)).size(), 1u);
  EXPECT_EQ(group_homomorphisms(cyclic_group(2), symmetric_group(3)).size(), 4u);
  EXPECT_EQ(group_homomorphisms(cyclic_group(3), cyclic_group(2)).size(), 1u);
  for (const auto& phi : group_homomorphisms(dihedral_group(3), symmetric_group(3)))
    EXPECT_TRUE(is_group_homomorphism(dihedral_group(3), symmetric_group(3), phi));
}

TEST(GroupAlgebra, HopfOverSeveralFields) {
  for (const auto& g : {cyclic_group(2), cyclic_group(6), symmetric_group(3), dihedral_group(4),
                        direct_product(cyclic_group(2), cyclic_group(2))}) {
    EXPECT_TRUE(group_algebra(g, Q{}).verified()) << g.name();
    EXPECT_TRUE(group_algebra(g, Fp(5)).verified()) << g.name();
    EXPECT_TRUE(group_algebra(g, Fp(2)).verified()) << g.name();
    EXPECT_EQ(group_algebra(g, Q{}).name(), "k" + g.name());
  }
}

TEST(GroupAlgebra, HomomorphismsLinearizeToHopfMaps) {
  Fp k(5);
  auto z6 = cyclic_group(6), z3 = cyclic_group(3);
  auto a = group_algebra(z6, k), b = group_algebra(z3, k);
  for (const auto& phi : group_homomorphisms(z6, z3)) EXPECT_EQ(group_hom_morphism(a, b, phi).certificate, Certificate::hopf);
  // a function that is not a homomorphism is a coalgebra map only
  auto f = group_hom_morphism(a, b, {0, 0, 0, 0, 0, 1});
  EXPECT_EQ(f.certificate, Certificate::coalgebra);
}

TEST(GroupAlgebra, InverseMorphism) {
  Q k;
  auto h = group_algebra(symmetric_group(3), k);
  auto inv = inverse_morphism(h);
  EXPECT_EQ(inv.matrix, h.antipode());
  EXPECT_EQ(inv.matrix * inv.matrix, Matrix<Q>::identity(k, 6));
  EXPECT_THROW(inverse_morphism(sweedler_h4(k)), PreconditionError);
}

TEST(Monoid, BialgebraWithoutAntipode) {
  Q k;
  auto b = monoid_bialgebra(k);
  EXPECT_TRUE(b.verified());
  EXPECT_TRUE(b.cocommutative());
  // S would have to fix the group-like z with z S(z) = 1, impossible in k{1, z}
  for (long long a : {-1, 0, 1, 2})
    for (long long c : {-1, 0, 1}) {
      auto s = Matrix<Q>::from_rows(k, {vec(k, {1, a}), vec(k, {0, c})}, 2);
      EXPECT_FALSE(HopfAlgebra<Q>::make(b, s).verified());
    }
}

TEST(FiniteAlgebras, MatrixAndProductAlgebras) {
  Q k;
  EXPECT_TRUE(check_algebra(matrix_algebra(3, k)).pass);
  EXPECT_TRUE(check_algebra(product_algebra(4, k)).pass);
  EXPECT_TRUE(check_algebra(testkit::upper_triangular_algebra(k)).pass);
  auto broken = product_algebra(2, k);
  broken.unit = vec(k, {1, 0});
  EXPECT_FALSE(check_algebra(broken).pass);
  EXPECT_THROW(dual_coalgebra(broken), AxiomError);
}

TEST(FiniteAlgebras, DualsAreCoalgebras) {
  Fp k(3);
  auto mc = matrix_coalgebra(3, k);
  EXPECT_TRUE(mc.verified());
  EXPECT_FALSE(mc.cocommutative());
  EXPECT_EQ(mc.name(), "Mc(3)");
  auto d = dual_coalgebra(product_algebra(3, k));
  EXPECT_TRUE(d.cocommutative());
  EXPECT_EQ(d.name(), "k^3*");
  // the dual of k^m has m group-likes: the coordinate functionals
  EXPECT_EQ(testkit::enumerate_grouplikes(d).size(), 3u);
  EXPECT_EQ(testkit::enumerate_grouplikes(matrix_coalgebra(2, k)).size(), 0u);
}

TEST(FiniteAlgebras, DualMapsOfAlgebraMaps) {
  Q k;
  auto a = product_algebra(2, k), b = product_algebra(3, k);
  // e_x -> sum of e_y with s(y) = x, for s = (0, 0, 1)
  auto f = Matrix<Q>::from_rows(k, {vec(k, {1, 0}), vec(k, {1, 0}), vec(k, {0, 1})}, 2);
  ASSERT_TRUE(check_algebra_map(a, b, f).pass);
  auto m = dual_map(dual_coalgebra(b), dual_coalgebra(a), f);
  EXPECT_EQ(m.certificate, Certificate::coalgebra);
  auto g = Matrix<Q>::from_rows(k, {vec(k, {1, 1}), vec(k, {0, 0}), vec(k, {0, 0})}, 2);
  EXPECT_FALSE(check_algebra_map(a, b, g).pass);
  EXPECT_EQ(dual_map(dual_coalgebra(b), dual_coalgebra(a), g).certificate, Certificate::linear_only);
}

TEST(Taft, SmallCasesVerifyAndHaveAntipodeOrder2n) {
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 3}, {3, 7}, {4, 5}, {3, 13}, {5, 11}}) {
    Fp k(p);
    auto h = taft(n, k);
    EXPECT_TRUE(h.verified()) << n << " over F" << p;
    EXPECT_EQ(h.dim(), n * n);
    EXPECT_FALSE(h.cocommutative());
    auto s = h.antipode(), pw = s;
    std::size_t order = 1;
    while (!(pw == Matrix<Fp>::identity(k, n * n))) pw = pw * s, ++order;
    EXPECT_EQ(order, 2 * n);
  }
}

TEST(Taft, NeedsRootsOfUnity) {
  EXPECT_THROW(taft(3, Q{}), PreconditionError);
  EXPECT_THROW(taft(3, Fp(5)), PreconditionError);
  EXPECT_NO_THROW(taft(2, Q{}));
}

TEST(Taft, T2IsSweedler) {
  Q k;
  auto t2 = taft(2, k), h4 = sweedler_h4(k);
  // T2 basis 1, x, g, gx; H4 basis 1, g, x, gx
  Matrix<Q> p(k, 4, 4);
  p(0, 0) = p(2, 1) = p(1, 2) = p(3, 3) = k.one();
  auto f = make_morphism(t2, h4, p);
  EXPECT_TRUE(certify(f).pass) << certify(f).message();
}

TEST(Sweedler, StructureAndRestrictions) {
  Fp k(5);
  auto h = sweedler_h4(k);
  EXPECT_TRUE(h.verified());
  EXPECT_EQ(h.name(), "H4");
  EXPECT_FALSE(h.cocommutative());
  auto s2 = h.antipode() * h.antipode();
  EXPECT_FALSE(s2 == Matrix<Fp>::identity(k, 4));
  EXPECT_EQ(s2 * s2, Matrix<Fp>::identity(k, 4));
  EXPECT_THROW(sweedler_h4(Fp(2)), PreconditionError);
  EXPECT_EQ(testkit::enumerate_grouplikes(h.coalgebra()).size(), 2u);
}

TEST(DividedPowers, Structure) {
  Fp k(2);
  auto d = divided_powers(3, k);
  EXPECT_TRUE(d.verified());
  EXPECT_TRUE(d.cocommutative());
  EXPECT_EQ(d.name(), "DP(3)");
  EXPECT_EQ(testkit::enumerate_grouplikes(d).size(), 1u);
}
