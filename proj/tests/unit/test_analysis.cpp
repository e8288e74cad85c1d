#include "examples.hpp"

#include <hopfkit/analysis.hpp>
#include <hopfkit/characters.hpp>
#include <hopfkit/constructions.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace hopfkit;
namespace ex = hopfkit::testing;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CycloScalar evaluate(const Vec& p, const Vec& x) {
  CycloScalar s;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * x[i];
  return s;
}

CharacterHint group_hint(CharacterHint::Kind kind, const FiniteGroup& g) { return CharacterHint{kind, g}; }

/// Column orthogonality of a character table: sum_x chi(x) conj(psi(x)) = |G| delta.
void expect_orthonormal(const FiniteGroup& g, const CharacterTable& t) {
  for (std::size_t a = 0; a < t.values.size(); ++a) {
    for (std::size_t b = 0; b < t.values.size(); ++b) {
      CycloScalar s;
      for (std::size_t x = 0; x < g.order(); ++x) s += t.value(a, x) * t.value(b, x).conj();
      EXPECT_EQ(s, a == b ? CycloScalar(static_cast<std::int64_t>(g.order())) : CycloScalar()) << a << " " << b;
    }
  }
}

}  // namespace

TEST(CharacterTable, SymmetricGroupS3) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const CharacterTable t = character_table(s3);
  ASSERT_EQ(t.degrees, (std::vector<std::size_t>{1, 1, 2}));
  ASSERT_EQ(t.classes.size(), 3u);
  for (std::size_t x = 0; x < 6; ++x) {
    const std::size_t ord = s3.element_order(x);
    EXPECT_EQ(t.value(0, x), CycloScalar(1));
    EXPECT_EQ(t.value(1, x), CycloScalar(ord == 2 ? -1 : 1));
    EXPECT_EQ(t.value(2, x), CycloScalar(ord == 1 ? 2 : ord == 2 ? 0 : -1));
  }
}

TEST(CharacterTable, S4AndNonAbelianOrder21) {
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  const CharacterTable t4 = character_table(s4);
  EXPECT_EQ(t4.degrees, (std::vector<std::size_t>{1, 1, 2, 3, 3}));
  expect_orthonormal(s4, t4);

  const FiniteGroup g21 = FiniteGroup::builtin("Z7xZ3");
  const CharacterTable t21 = character_table(g21);
  EXPECT_EQ(t21.degrees, (std::vector<std::size_t>{1, 1, 1, 3, 3}));
  expect_orthonormal(g21, t21);
}

TEST(CharacterTable, CyclicGroupHasRootsOfUnity) {
  const FiniteGroup z5 = FiniteGroup::cyclic(5);
  const CharacterTable t = character_table(z5);
  EXPECT_EQ(t.degrees, std::vector<std::size_t>(5, 1));
  expect_orthonormal(z5, t);
}

TEST(Characters, CyclicGroupAlgebra) {
  const CharacterSet c = characters(group_algebra(FiniteGroup::cyclic(3)));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.degrees, std::vector<std::size_t>(3, 1));
  EXPECT_EQ(c.characters[0], Vec(3, CycloScalar(1)));
}

TEST(Characters, SymmetricGroupAlgebraDegrees) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const HopfPtr h = group_algebra(s3);
  const CharacterSet c = characters(h, group_hint(CharacterHint::Kind::GroupAlgebra, s3));
  EXPECT_EQ(sorted(c.degrees), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(c.provenance, CharacterProvenance::GroupExplicit);
  EXPECT_EQ(c.characters[0], h->counit());
  EXPECT_EQ(sorted(characters(h).degrees), (std::vector<std::size_t>{1, 1, 2}));
}

TEST(Characters, DualGroupAlgebraPointEvaluations) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const CharacterSet c = characters(dual_group_algebra(s3), group_hint(CharacterHint::Kind::DualGroupAlgebra, s3));
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(c.provenance, CharacterProvenance::DualGroupExplicit);
}

TEST(Characters, DoubleOfZ3IsCommutative) {
  const QTPair& qt = ex::qt_example("D(kZ3)").qt;
  const CharacterSet c = characters(qt.hopf());
  EXPECT_EQ(c.size(), 9u);
  EXPECT_EQ(c.degrees, std::vector<std::size_t>(9, 1));
  for (const Vec& chi : c.characters) {
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        EXPECT_EQ(evaluate(chi, qt.algebra().multiply_basis(i, j)), chi[i] * chi[j]);
      }
    }
  }
}

TEST(Characters, DoubleOfS3) {
  const ex::QtExample& e = ex::qt_example("D(kS3)");
  ASSERT_TRUE(e.hint.has_value());
  const CharacterSet c = characters(e.qt.hopf(), *e.hint);
  EXPECT_EQ(c.size(), 8u);
  std::size_t sq = 0;
  for (std::size_t d : c.degrees) sq += d * d;
  EXPECT_EQ(sq, 36u);
  EXPECT_EQ(c.provenance, CharacterProvenance::DoubleExplicit);
}

TEST(Characters, UnavailableCasesAreExplicit) {
  EXPECT_THROW(characters(a_c2()), CharactersUnavailable);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  EXPECT_THROW(characters(a_c2(), group_hint(CharacterHint::Kind::GroupAlgebra, s3)), CharactersUnavailable);
}

TEST(Characters, UserSuppliedValidation) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const HopfPtr h = group_algebra(s3);
  const CharacterSet known = characters(h, group_hint(CharacterHint::Kind::GroupAlgebra, s3));
  const CharacterSet user = user_characters(h, known.characters);
  EXPECT_EQ(user.degrees, known.degrees);
  EXPECT_EQ(user.provenance, CharacterProvenance::UserSupplied);

  std::vector<Vec> swapped = known.characters;
  std::swap(swapped[0], swapped[1]);
  EXPECT_THROW(user_characters(h, swapped), StructureError);

  std::vector<Vec> scaled = known.characters;
  scaled[2] = CycloScalar(2) * scaled[2];
  EXPECT_THROW(user_characters(h, scaled), StructureError);

  std::vector<Vec> missing(known.characters.begin(), known.characters.end() - 1);
  EXPECT_THROW(user_characters(h, missing), StructureError);
}

TEST(SMatrix, TrivialRIsRankOne) {
  const ex::QtExample& e = ex::qt_example("kS3#0");
  const CharacterSet c = characters(e.qt.hopf(), *e.hint);
  const SMatrix s = s_matrix(e.qt, c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      EXPECT_EQ(s.entries[i][j], CycloScalar(static_cast<std::int64_t>(c.degrees[i] * c.degrees[j])));
    }
  }
  EXPECT_FALSE(s.nondegenerate);
  EXPECT_TRUE(s.matches_factorizable);
}

TEST(SMatrix, DoubleOfZ3IsNondegenerate) {
  const QTPair& qt = ex::qt_example("D(kZ3)").qt;
  const SMatrix s = s_matrix(qt, characters(qt.hopf()));
  EXPECT_TRUE(s.nondegenerate);
  EXPECT_TRUE(s.symmetric);
  EXPECT_TRUE(s.matches_factorizable);
}

TEST(SMatrix, CyclicBicharacterEntries) {
  // Q = sum rho(a,b) rho(b,a) e_a (x) e_b, so s_ij = rho(i,j) rho(j,i) with
  // chi_i(e_a) = delta_{i,a}
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  for (const GroupQtStructure& st : enumerate_qt_group(z3)) {
    const CharacterGroup& chars = st.rho.chars;
    if (chars.size() != 3) continue;
    const CharacterSet c = characters(st.pair.hopf(), CharacterHint{CharacterHint::Kind::GroupAlgebra, z3});
    std::vector<std::size_t> idx;
    for (const Vec& chi : c.characters) {
      for (std::size_t a = 0; a < 3; ++a) {
        bool same = true;
        for (std::size_t i = 0; i < 3; ++i) same = same && chi[chars.subgroup[i]] == chars.value(a, i);
        if (same) idx.push_back(a);
      }
    }
    ASSERT_EQ(idx.size(), 3u);
    const SMatrix s = s_matrix(st.pair, c);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(s.entries[i][j], st.rho.value(idx[i], idx[j]) * st.rho.value(idx[j], idx[i]));
      }
    }
    EXPECT_EQ(s.nondegenerate, !st.rho.is_trivial());
  }
}

TEST(SMatrix, SymmetricAndMatchesFactorizabilityOnSemisimpleExamples) {
  for (const ex::QtExample& e : ex::qt_examples()) {
    if (!e.hint) continue;
    const SMatrix s = s_matrix(e.qt, characters(e.qt.hopf(), *e.hint));
    EXPECT_TRUE(s.symmetric) << e.name;
    EXPECT_EQ(s.nondegenerate, e.qt.factorizable()) << e.name;
  }
}

TEST(Transparency, TriangularMeansAllTransparent) {
  const ex::QtExample& e = ex::qt_example("kS3#0");
  const CharacterSet c = characters(e.qt.hopf(), *e.hint);
  const TransparencyReport t = transparent_characters(e.qt, c);
  EXPECT_EQ(t.transparent, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(t.matches);
}

TEST(Transparency, FactorizableMeansOnlyCounit) {
  for (const std::string name : {"D(kZ3)", "D(kS3)", "kZ15"}) {
    const ex::QtExample& e = ex::qt_example(name);
    const TransparencyReport t = transparent_characters(e.qt, characters(e.qt.hopf(), e.hint.value_or(CharacterHint{})));
    EXPECT_EQ(t.transparent, std::vector<std::size_t>{0}) << name;
    EXPECT_TRUE(t.matches) << name;
  }
}

TEST(Transparency, S3OverA3PullsBackFromTheQuotient) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const ex::QtExample& e = ex::qt_example("kS3#1");
  const CharacterSet c = characters(e.qt.hopf(), *e.hint);
  const TransparencyReport t = transparent_characters(e.qt, c);
  // characters constant on A3: chi(a) = chi(1)
  std::vector<std::size_t> oracle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    bool constant = true;
    for (std::size_t x = 0; x < 6; ++x) {
      if (s3.element_order(x) != 2) constant = constant && c.characters[i][x] == c.characters[i][0];
    }
    if (constant) oracle.push_back(i);
  }
  EXPECT_EQ(oracle.size(), 2u);
  EXPECT_EQ(t.transparent, oracle);
  EXPECT_TRUE(t.matches);
  EXPECT_EQ(t.pulled_back.dim(), 2u);
}

TEST(Classification, CyclicFifteen) {
  const ClassificationReport r = classification_report(ex::qt_example("kZ15").qt);
  for (const ReportItem& item : r.items) {
    if (item.name == "triangular branch") {
      EXPECT_EQ(item.status, ItemStatus::NotApplicable);
    } else {
      EXPECT_EQ(item.status, ItemStatus::Pass) << item.name << ": " << item.detail;
    }
  }
  EXPECT_EQ(r.item("symmetrised bicharacter nondegenerate").status, ItemStatus::Pass);
  EXPECT_THROW(r.item("no such item"), std::out_of_range);
}

TEST(Classification, NonAbelianOrder21TriangularBranch) {
  const ClassificationReport r = classification_report(ex::qt_example("kZ7xZ3").qt);
  EXPECT_EQ(r.item("odd square-free dimension").status, ItemStatus::Pass);
  EXPECT_EQ(r.item("semisimple").status, ItemStatus::Pass);
  EXPECT_EQ(r.item("triangular branch").status, ItemStatus::Pass);
}

TEST(Classification, AC2IsOutOfScope) {
  const ClassificationReport r = classification_report(ex::qt_example("A_C2(0,1,0,0)").qt);
  EXPECT_EQ(r.item("odd square-free dimension").status, ItemStatus::Fail);
  EXPECT_NE(r.item("semisimple").detail.find("Tr S^2 = 0"), std::string::npos);
  const std::vector<std::string> order = {"odd square-free dimension",
                                          "semisimple",
                                          "R in kG(H) (x) kG(H)",
                                          "Phi_R(H*) commutative normal Hopf subalgebra",
                                          "exact sequence",
                                          "H_R commutative with cyclic Gamma",
                                          "bicharacter invariant",
                                          "bicharacter nondegenerate",
                                          "symmetrised bicharacter nondegenerate",
                                          "triangular branch"};
  ASSERT_EQ(r.items.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(r.items[i].name, order[i]);
}

TEST(SimpleCorollary, ConsistentOnExamples) {
  for (const ex::QtExample& e : ex::qt_examples()) {
    if (e.qt.algebra().dim() > 16) continue;
    const SimpleCorollaryReport r = simple_corollary_check(e.qt);
    EXPECT_TRUE(r.consistent) << e.name;
    if (r.injective) EXPECT_TRUE(r.order_divides_rank) << e.name;
  }
}
