#include "examples.hpp"
#include "oracles.hpp"

#include <hopfkit/constructions.hpp>
#include <hopfkit/hopf_ops.hpp>
#include <hopfkit/quotients.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hopfkit;

namespace {

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (const std::vector<std::size_t>& img : homomorphisms(a, b)) {
    if (std::set<std::size_t>(img.begin(), img.end()).size() == a.order()) return true;
  }
  return false;
}

std::vector<std::size_t> elements_of_order_not(const FiniteGroup& g, std::size_t ord) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != ord) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Groups, BuiltinsAndValidation) {
  EXPECT_EQ(FiniteGroup::builtin("Z5").order(), 5u);
  EXPECT_EQ(FiniteGroup::builtin("S3").order(), 6u);
  EXPECT_EQ(FiniteGroup::builtin("S4").order(), 24u);
  const FiniteGroup g21 = FiniteGroup::builtin("Z7xZ3");
  EXPECT_EQ(g21.order(), 21u);
  EXPECT_FALSE(g21.is_abelian());
  EXPECT_THROW(FiniteGroup::builtin("Q8x"), StructureError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), StructureError);
  EXPECT_THROW(FiniteGroup::builtin("Z65").subgroups(), StructureError);
}

TEST(Groups, ConjugacyAndSubgroups) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(s3.conjugacy_classes().size(), 3u);
  EXPECT_EQ(s3.subgroups().size(), 6u);
  EXPECT_TRUE(s3.is_normal(elements_of_order_not(s3, 2)));
  EXPECT_EQ(FiniteGroup::symmetric(4).conjugacy_classes().size(), 5u);
}

TEST(GroupAlgebra, TrivialGroupGivesTheField) {
  const HopfPtr k = group_algebra(FiniteGroup::cyclic(1));
  EXPECT_EQ(k->dim(), 1u);
  EXPECT_TRUE(verify_hopf_axioms(*k).ok());
}

TEST(GroupAlgebra, SymmetricGroup) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const HopfPtr h = group_algebra(s3);
  EXPECT_EQ(h->dim(), 6u);
  EXPECT_TRUE(h->is_cocommutative());
  EXPECT_FALSE(h->is_commutative());
  const GroupLikes gl = group_likes(*h);
  ASSERT_EQ(gl.order(), 6u);
  EXPECT_TRUE(isomorphic(FiniteGroup::from_table(gl.table), s3));
}

TEST(GroupAlgebra, DualOfCyclic) {
  const HopfPtr d = dual_group_algebra(FiniteGroup::cyclic(3));
  EXPECT_TRUE(d->is_commutative());
  EXPECT_TRUE(verify_hopf_axioms(*d).ok());
  EXPECT_EQ(group_likes(*d).order(), 3u);
  EXPECT_FALSE(dual_group_algebra(FiniteGroup::symmetric(3))->is_cocommutative());
}

TEST(Idempotents, CyclicOfOrderTwo) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const std::vector<Vec> e = idempotents(z2, character_group(z2, {0, 1}));
  ASSERT_EQ(e.size(), 2u);
  const CycloScalar half(Rational(1, 2));
  EXPECT_EQ(e[0], (Vec{half, half}));
  EXPECT_EQ(e[1], (Vec{half, -half}));
}

TEST(Idempotents, OrthogonalAndComplete) {
  for (std::size_t n : {3u, 4u, 6u}) {
    const FiniteGroup g = FiniteGroup::cyclic(n);
    const HopfPtr h = group_algebra(g);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    const std::vector<Vec> e = idempotents(g, character_group(g, all));
    ASSERT_EQ(e.size(), n);
    Vec sum(n);
    for (std::size_t a = 0; a < n; ++a) {
      sum = sum + e[a];
      for (std::size_t b = 0; b < n; ++b) EXPECT_EQ(h->multiply(e[a], e[b]), a == b ? e[a] : Vec(n)) << n;
    }
    EXPECT_EQ(sum, h->unit());
  }
}

TEST(Idempotents, RejectsNonAbelianSubgroup) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  EXPECT_THROW(character_group(s3, {0, 1, 2, 3, 4, 5}), StructureError);
}

TEST(Bicharacters, TrivialFormGivesOneTensorOne) {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const CharacterGroup chars = character_group(z4, {0, 1, 2, 3});
  const std::vector<Bicharacter> forms = enumerate_bicharacters(z4, chars);
  EXPECT_EQ(forms.size(), 4u);
  ASSERT_TRUE(forms[0].is_trivial());
  EXPECT_EQ(bicharacter_r_matrix(z4, forms[0]), group_algebra(z4)->one_tensor());
}

TEST(Bicharacters, AreBimultiplicative) {
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const CharacterGroup chars = character_group(g, {0, 1, 2, 3});
  const std::vector<Bicharacter> forms = enumerate_bicharacters(g, chars);
  EXPECT_EQ(forms.size(), 16u);
  for (const Bicharacter& rho : forms) {
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t c = 0; c < 4; ++c) {
          const std::size_t ab = chars.group.mul(a, b);
          const std::size_t bc = chars.group.mul(b, c);
          EXPECT_EQ(rho.value(ab, c), rho.value(a, c) * rho.value(b, c));
          EXPECT_EQ(rho.value(a, bc), rho.value(a, b) * rho.value(a, c));
        }
      }
    }
  }
}

TEST(Bicharacters, CyclicNondegenerateHasFullRank) {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  std::size_t full = 0;
  for (const GroupQtStructure& st : enumerate_qt_group(z3)) {
    if (st.pair.rank() == 3u) ++full;
    EXPECT_TRUE(st.pair.h_r().space().dim() <= 3u);
  }
  EXPECT_EQ(full, 2u);
}

TEST(Bicharacters, AlternatingSubgroupOfS3IsInvariant) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const std::vector<std::size_t> a3 = elements_of_order_not(s3, 2);
  const CharacterGroup chars = character_group(s3, a3);
  for (const Bicharacter& rho : enumerate_bicharacters(s3, chars)) {
    EXPECT_FALSE(invariance_witness(s3, rho).has_value());
    const QtVerification v = verify_qt(group_algebra(s3), bicharacter_r_matrix(s3, rho));
    ASSERT_TRUE(v.ok());
    std::vector<Vec> ka3;
    for (std::size_t x : a3) ka3.push_back(unit_vec(6, x));
    EXPECT_TRUE(Subspace::span(6, ka3).contains(v.pair->h_r().space()));
  }
}

TEST(Enumeration, CensusMatchesBruteForceOracle) {
  for (const std::string name : {"Z1", "Z2", "Z3", "Z4", "Z6", "S3", "Z7xZ3"}) {
    const FiniteGroup g = FiniteGroup::builtin(name);
    const std::vector<GroupQtStructure> found = enumerate_qt_group(g);
    EXPECT_EQ(found.size(), hopfkit::testing::census_oracle(g.table())) << name;
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = i + 1; j < found.size(); ++j) EXPECT_NE(found[i].pair.r(), found[j].pair.r()) << name;
    }
  }
  EXPECT_EQ(enumerate_qt_group(FiniteGroup::builtin("S3")).size(), 3u);
  EXPECT_EQ(enumerate_qt_group(FiniteGroup::builtin("Z3")).size(), 3u);
  EXPECT_EQ(enumerate_qt_group(FiniteGroup::builtin("Z7xZ3")).size(), 1u);
}

TEST(Enumeration, RecoversGammaAndRho) {
  for (const std::string name : {"Z4", "S3"}) {
    const FiniteGroup g = FiniteGroup::builtin(name);
    for (const GroupQtStructure& st : enumerate_qt_group(g)) {
      const Bicharacter rec = recover_bicharacter(g, st.pair);
      EXPECT_EQ(bicharacter_r_matrix(g, rec), st.pair.r()) << name;
    }
  }
}

TEST(Enumeration, RefusesLargeGroups) { EXPECT_THROW(enumerate_qt_group(FiniteGroup::cyclic(65)), StructureError); }

TEST(Double, OfTheField) {
  const QTPair d = drinfeld_double(*group_algebra(FiniteGroup::cyclic(1)));
  EXPECT_EQ(d.algebra().dim(), 1u);
  EXPECT_TRUE(d.triangular());
}

TEST(Double, OfZ2) {
  const QTPair d = drinfeld_double(*group_algebra(FiniteGroup::cyclic(2)));
  EXPECT_EQ(d.algebra().dim(), 4u);
  EXPECT_TRUE(d.algebra().is_commutative());
  EXPECT_TRUE(d.algebra().is_cocommutative());
  EXPECT_TRUE(d.factorizable());
}

TEST(Double, RankAndCanonicalQuotient) {
  for (const HopfPtr& a : {group_algebra(FiniteGroup::cyclic(3)), group_algebra(FiniteGroup::symmetric(3)), a_c2()}) {
    if (a->dim() > 6) continue;
    const QTPair d = drinfeld_double(*a);
    EXPECT_EQ(d.algebra().dim(), a->dim() * a->dim());
    EXPECT_TRUE(verify_hopf_axioms(d.algebra()).ok());
    EXPECT_EQ(d.rank(), a->dim());
    EXPECT_TRUE(d.factorizable());
    EXPECT_EQ(canonical_quotient(d).presentation.quotient->dim(), 1u);
  }
}

TEST(Bicrossed, TrivialActionsGiveTensorProduct) {
  const FiniteGroup gamma = FiniteGroup::cyclic(2);
  const FiniteGroup f = FiniteGroup::cyclic(3);
  FiniteGroup::Table left(2, std::vector<std::size_t>(3));
  FiniteGroup::Table right(2, std::vector<std::size_t>(3));
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t x = 0; x < 3; ++x) {
      left[s][x] = x;
      right[s][x] = s;
    }
  }
  const MatchedPair mp(gamma, f, left, right);
  EXPECT_TRUE(mp.left_action_trivial());
  const HopfPtr bp = bicrossed_product(mp);
  EXPECT_EQ(bp->dim(), 6u);
  EXPECT_TRUE(verify_hopf_axioms(*bp).ok());
  EXPECT_TRUE(bp->is_commutative());
  EXPECT_TRUE(bp->is_cocommutative());
  // (e_s # x)(e_t # y) = delta_{s,t} e_s # xy
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t y = 0; y < 3; ++y) {
          const Vec expected = s == t ? unit_vec(6, s * 3 + f.mul(x, y)) : Vec(6);
          EXPECT_EQ(bp->multiply_basis(s * 3 + x, t * 3 + y), expected);
        }
      }
    }
  }
}

TEST(Bicrossed, OrderTwentyOneIsAGroupAlgebra) {
  const FiniteGroup sigma = FiniteGroup::builtin("Z7xZ3");
  const MatchedPair mp = MatchedPair::from_factorization(sigma, {0, 1, 2, 3, 4, 5, 6}, {0, 7, 14});
  EXPECT_TRUE(mp.left_action_trivial());
  const HopfPtr bp = bicrossed_product(mp);
  EXPECT_TRUE(verify_hopf_axioms(*bp).ok());
  EXPECT_TRUE(bp->is_cocommutative());
  const GroupLikes gl = group_likes(*bp);
  ASSERT_EQ(gl.order(), 21u);
  EXPECT_EQ(Subspace::span(21, gl.elements), Subspace::whole(21));
  const FiniteGroup g = FiniteGroup::from_table(gl.table);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_TRUE(isomorphic(g, sigma));
}

TEST(Bicrossed, NontrivialLeftActionIsNotCocommutative) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  std::size_t t = 0;
  while (s3.element_order(t) != 2) ++t;
  const MatchedPair mp = MatchedPair::from_factorization(s3, s3.closure({t}), elements_of_order_not(s3, 2));
  EXPECT_FALSE(mp.left_action_trivial());
  const HopfPtr bp = bicrossed_product(mp);
  EXPECT_TRUE(verify_hopf_axioms(*bp).ok());
  EXPECT_FALSE(bp->is_cocommutative());
}

TEST(Bicrossed, RejectsIncompatibleActions) {
  const FiniteGroup gamma = FiniteGroup::cyclic(2);
  const FiniteGroup f = FiniteGroup::cyclic(3);
  FiniteGroup::Table left(2, std::vector<std::size_t>(3, 0));
  FiniteGroup::Table right(2, std::vector<std::size_t>(3, 0));
  EXPECT_THROW(MatchedPair(gamma, f, left, right), StructureError);
}

TEST(AC2, Relations) {
  const HopfPtr h = a_c2();
  EXPECT_TRUE(verify_hopf_axioms(*h).ok());
  EXPECT_EQ(h->multiply_basis(2, 2), Vec(8));
  EXPECT_EQ(h->multiply_basis(3, 3), Vec(8));
  EXPECT_EQ(h->multiply_basis(1, 1), h->unit());
  EXPECT_EQ(h->multiply_basis(1, 2), CycloScalar(-1) * h->basis_vector(4));
  EXPECT_EQ(h->multiply_basis(3, 2), CycloScalar(-1) * h->basis_vector(6));
  EXPECT_EQ(h->comultiply_basis(3), TensorElement::outer(h->basis_vector(3), h->basis_vector(1)) +
                                        TensorElement::outer(h->unit(), h->basis_vector(3)));
  EXPECT_EQ(h->antipode(h->basis_vector(2)), CycloScalar(-1) * h->basis_vector(4));
  EXPECT_EQ(group_likes(*h).order(), 2u);
  EXPECT_TRUE(trace_s_squared(*h).is_zero());
  EXPECT_TRUE(a_c2_rewriting_confluent());
}

TEST(AC2, FamilyVerifiesOnAGrid) {
  const HopfPtr h = a_c2();
  const std::vector<CycloScalar> pts = {CycloScalar(0), CycloScalar(1), CycloScalar(Rational(-2, 3))};
  for (const CycloScalar& a : pts) {
    for (const CycloScalar& b : pts) {
      for (const CycloScalar& c : pts) {
        const QtVerification v = verify_qt(h, a_c2_r_family(a, b, c, CycloScalar(2)));
        ASSERT_TRUE(v.ok());
        EXPECT_EQ(v.pair->triangular(), b == c);
      }
    }
  }
}

TEST(AC2, QMatchesTheClosedForm) {
  const HopfPtr h = a_c2();
  for (const auto& [b, c] : std::vector<std::pair<int, int>>{{1, 0}, {3, -1}, {0, 2}}) {
    const QTPair qt = QTPair::make(h, a_c2_r_family(0, b, c, 0));
    const CycloScalar bc(b - c);
    // 1(x)1 + (b-c)(y(x)x - x(x)y)(1(x)g) - (b-c)^2 xy(x)xy
    TensorElement mid = TensorElement::outer(h->basis_vector(3), h->basis_vector(2)) -
                        TensorElement::outer(h->basis_vector(2), h->basis_vector(3));
    mid = h->tensor_multiply(mid, TensorElement::outer(h->unit(), h->basis_vector(1)));
    TensorElement expected = h->one_tensor();
    for (const auto& e : mid.entries()) expected(e.left, e.right) += bc * e.coeff;
    expected(6, 6) -= bc * bc;
    EXPECT_EQ(qt.q(), expected) << b << " " << c;
  }
}
