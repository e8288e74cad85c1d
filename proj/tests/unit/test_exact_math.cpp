#include <hopfkit/constructions.hpp>
#include <hopfkit/cyclo.hpp>
#include <hopfkit/matrix.hpp>
#include <hopfkit/tensor.hpp>

#include <gtest/gtest.h>

#include <limits>

using namespace hopfkit;

TEST(Cyclo, RootsOfUnity) {
  const CycloScalar i = CycloScalar::root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycloScalar(-1));
  EXPECT_EQ(CycloScalar::root_of_unity(3, 1) + CycloScalar::root_of_unity(3, 2), CycloScalar(-1));
  EXPECT_EQ(CycloScalar::root_of_unity(6, 3), CycloScalar(-1));
  EXPECT_EQ(CycloScalar::root_of_unity(8, 1) * CycloScalar::root_of_unity(8, 7), CycloScalar(1));
  EXPECT_EQ(CycloScalar(1) / CycloScalar::root_of_unity(3, 1), CycloScalar::root_of_unity(3, 2));
}

TEST(Cyclo, RationalArithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_THROW(Rational(1, 0), ArithmeticError);
}

TEST(Cyclo, MixedConductorsNormalise) {
  // zeta_6 = -zeta_3^2, and zeta_12^4 = zeta_3
  EXPECT_EQ(CycloScalar::root_of_unity(6, 1), -CycloScalar::root_of_unity(3, 2));
  EXPECT_EQ(CycloScalar::root_of_unity(12, 4), CycloScalar::root_of_unity(3, 1));
  const CycloScalar z = CycloScalar::root_of_unity(5, 2) - CycloScalar::root_of_unity(5, 2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.is_rational());
}

TEST(Cyclo, SumOfAllRootsVanishes) {
  for (int n : {2, 3, 5, 7, 9, 15}) {
    CycloScalar s;
    for (int k = 0; k < n; ++k) s += CycloScalar::root_of_unity(n, k);
    EXPECT_TRUE(s.is_zero()) << n;
  }
}

TEST(Cyclo, InverseAndConjugate) {
  const CycloScalar a = CycloScalar(2) + CycloScalar::root_of_unity(5, 1);
  EXPECT_EQ(a * a.inverse(), CycloScalar(1));
  const CycloScalar z = CycloScalar::root_of_unity(7, 3);
  EXPECT_EQ(z * z.conj(), CycloScalar(1));
  EXPECT_THROW(CycloScalar().inverse(), ArithmeticError);
}

TEST(Cyclo, TextRoundTrip) {
  const std::vector<CycloScalar> samples = {
      CycloScalar(0), CycloScalar(-7), CycloScalar(Rational(3, 4)), CycloScalar::root_of_unity(3, 2),
      CycloScalar(Rational(1, 3)) * CycloScalar::root_of_unity(15, 4) - CycloScalar(2)};
  for (const CycloScalar& s : samples) EXPECT_EQ(CycloScalar::parse(s.to_string()), s) << s.to_string();
  EXPECT_EQ(CycloScalar::parse("-1 - 1*z3^1"), CycloScalar::root_of_unity(3, 2));
  EXPECT_THROW(CycloScalar::parse("1 + * z3"), ArithmeticError);
}

TEST(Cyclo, OverflowIsReported) {
  const CycloScalar big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * big * big, ArithmeticError);
}

TEST(Matrix, RankAndKernel) {
  EXPECT_EQ(rank(ExactMatrix::identity(3)), 3u);
  EXPECT_TRUE(kernel_basis(ExactMatrix::identity(3)).empty());
  const ExactMatrix m = ExactMatrix::from_rows(2, {{1, 1}, {2, 2}});
  EXPECT_EQ(rank(m), 1u);
  const std::vector<Vec> k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(Subspace::span(2, k).contains(Vec{1, -1}));
}

TEST(Matrix, InverseDeterminantSolve) {
  const ExactMatrix m = ExactMatrix::from_rows(2, {{2, 1}, {1, 1}});
  EXPECT_EQ(determinant(m), CycloScalar(1));
  EXPECT_EQ(m * inverse(m), ExactMatrix::identity(2));
  const std::optional<Vec> x = solve(m, {3, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vec{1, 1}));
  EXPECT_FALSE(solve(ExactMatrix::from_rows(2, {{1, 1}, {1, 1}}), {1, 0}).has_value());
}

TEST(Subspace, EchelonEqualityAndLattice) {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}});
  EXPECT_EQ(a, b);
  const Subspace c = Subspace::span(3, {{0, 0, 1}});
  EXPECT_EQ(a.intersect(c).dim(), 0u);
  EXPECT_EQ(a.sum(c), Subspace::whole(3));
  EXPECT_TRUE(Subspace::whole(3).contains(a));
  Subspace d(3);
  EXPECT_TRUE(d.insert({1, 0, 0}));
  EXPECT_FALSE(d.insert({2, 0, 0}));
}

TEST(Tensor, FlipAndUnit) {
  const HopfPtr h = group_algebra(FiniteGroup::cyclic(3));
  TensorElement z(3, 3);
  z(0, 1) = 2;
  z(2, 1) = CycloScalar::root_of_unity(3, 1);
  EXPECT_EQ(z.flip().flip(), z);
  EXPECT_EQ(h->tensor_multiply(h->one_tensor(), z), z);
  EXPECT_EQ(h->tensor_multiply(z, h->one_tensor()), z);
}

TEST(Tensor, BicharacterRTimesInverse) {
  // R^-1 is obtained from the quasitriangular relation (S (x) id)(R).
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const HopfPtr h = group_algebra(z3);
  const CharacterGroup chars = character_group(z3, {0, 1, 2});
  for (const Bicharacter& rho : enumerate_bicharacters(z3, chars)) {
    const TensorElement r = bicharacter_r_matrix(z3, rho);
    const TensorElement r_inv = r.apply(h->antipode_matrix(), ExactMatrix::identity(3));
    EXPECT_EQ(h->tensor_multiply(r, r_inv), h->one_tensor());
  }
}

TEST(Tensor, ContractionsAndLegs) {
  const TensorElement t = TensorElement::outer({1, 2}, {0, 1, 1});
  EXPECT_EQ(t.contract_left({1, 0}), (Vec{0, 1, 1}));
  EXPECT_EQ(t.contract_right({0, 1, 0}), (Vec{1, 2}));
  EXPECT_EQ(t.rank(), 1u);
  EXPECT_EQ(t.left_legs().dim(), 1u);
}
