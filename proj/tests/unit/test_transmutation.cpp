#include "examples.hpp"

#include <hopfkit/constructions.hpp>
#include <hopfkit/hopf_ops.hpp>
#include <hopfkit/transmutation.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace hopfkit;
namespace ex = hopfkit::testing;

namespace {

const BraidedStructures& braided(const std::string& name) {
  static std::map<std::string, BraidedStructures> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, BraidedStructures(ex::qt_example(name).qt)).first;
  return it->second;
}

}  // namespace

TEST(BraidedComultiply, TrivialRGivesOrdinaryCoproduct) {
  const BraidedStructures& bs = braided("kS3#0");
  const FiniteDimHopf& h = bs.qt().algebra();
  for (std::size_t i = 0; i < h.dim(); ++i) EXPECT_EQ(bs.braided_comultiply_basis(i), h.comultiply_basis(i));
}

TEST(BraidedComultiply, UnitGoesToOneTensorOne) {
  for (const ex::QtExample& e : ex::qt_examples()) {
    if (e.qt.algebra().dim() > 16) continue;
    const BraidedStructures& bs = braided(e.name);
    EXPECT_EQ(bs.braided_comultiply(e.qt.algebra().unit()), e.qt.algebra().one_tensor()) << e.name;
  }
}

TEST(BraidedComultiply, ReconstructsCoproductOnCyclicBicharacter) {
  // Delta(a) = sum a_1 R2 (x) ad_{R1}(a_2), evaluated here from the entries
  const BraidedStructures& bs = braided("kZ3#1");
  const FiniteDimHopf& h = bs.qt().algebra();
  for (std::size_t a = 0; a < h.dim(); ++a) {
    TensorElement rebuilt(h.dim(), h.dim());
    for (const auto& d : bs.braided_comultiply_basis(a).entries()) {
      for (const auto& r : bs.qt().r().entries()) {
        const Vec left = h.multiply(h.basis_vector(d.left), h.basis_vector(r.right));
        const Vec right = adjoint_action(h, h.basis_vector(r.left), h.basis_vector(d.right));
        rebuilt = rebuilt + TensorElement::outer(d.coeff * r.coeff * left, right);
      }
    }
    EXPECT_EQ(rebuilt, h.comultiply_basis(a)) << a;
  }
}

TEST(BraidedMultiply, TrivialRGivesDualProduct) {
  const BraidedStructures& bs = braided("kS3#0");
  const HopfPtr d = dual(bs.qt().algebra());
  for (std::size_t k = 0; k < d->dim(); ++k) {
    for (std::size_t l = 0; l < d->dim(); ++l) EXPECT_EQ(bs.braided_multiply_basis(k, l), d->multiply_basis(k, l));
  }
}

TEST(BraidedMultiply, CounitIsTheUnit) {
  for (const std::string name : {"A_C2(1,2,3,4)", "D(kZ3)", "kS3#1"}) {
    const BraidedStructures& bs = braided(name);
    const FiniteDimHopf& h = bs.qt().algebra();
    for (std::size_t q = 0; q < h.dim(); ++q) {
      EXPECT_EQ(bs.braided_multiply(h.counit(), h.basis_vector(q)), h.basis_vector(q)) << name;
      EXPECT_EQ(bs.braided_multiply(h.basis_vector(q), h.counit()), h.basis_vector(q)) << name;
    }
  }
}

TEST(BraidedMultiply, AssociativeOnEveryTripleOfDoubleOfZ3) {
  const BraidedStructures& bs = braided("D(kZ3)");
  const std::size_t n = bs.qt().algebra().dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vec& ab = bs.braided_multiply_basis(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const Vec lhs = bs.braided_multiply(ab, unit_vec(n, c));
        const Vec rhs = bs.braided_multiply(unit_vec(n, a), bs.braided_multiply_basis(b, c));
        ASSERT_EQ(lhs, rhs) << a << " " << b << " " << c;
      }
    }
  }
}

TEST(CoadjointCoaction, CounitGoesToCounitTensorCounit) {
  for (const std::string name : {"A_C2(1,2,3,4)", "D(kZ3)", "kS3#1"}) {
    const BraidedStructures& bs = braided(name);
    const FiniteDimHopf& h = bs.qt().algebra();
    EXPECT_EQ(bs.coadjoint_coaction(h.counit()), TensorElement::outer(h.counit(), h.counit())) << name;
    for (std::size_t p = 0; p < h.dim(); ++p) {
      // (id (x) eps_{H*}) rho = id, with eps_{H*}(q) = q(1)
      EXPECT_EQ(bs.coadjoint_coaction(h.basis_vector(p)).contract_right(h.unit()), h.basis_vector(p)) << name;
    }
  }
}

TEST(CoadjointCoaction, AbelianGroupAlgebraCoactsTrivially) {
  const BraidedStructures& bs = braided("kZ3#1");
  const FiniteDimHopf& h = bs.qt().algebra();
  for (std::size_t p = 0; p < 3; ++p) {
    EXPECT_EQ(bs.coadjoint_coaction(h.basis_vector(p)), TensorElement::outer(h.basis_vector(p), h.counit()));
  }
}

TEST(CoadjointCoaction, SymmetricGroupConjugationFormula) {
  // rho(delta_g) = sum_a delta_{a^-1 g a} (x) delta_{a^-1}
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const BraidedStructures& bs = braided("kS3#1");
  for (std::size_t g = 0; g < 6; ++g) {
    TensorElement expected(6, 6);
    for (std::size_t a = 0; a < 6; ++a) {
      const std::size_t ai = s3.inv(a);
      expected(s3.mul(s3.mul(ai, g), a), ai) += CycloScalar(1);
    }
    EXPECT_EQ(bs.coadjoint_coaction(unit_vec(6, g)), expected) << g;
  }
}

TEST(CoadjointCoaction, GroupLikeSubcoalgebrasAreSubcomodules) {
  for (const std::string name : {"A_C2(1,2,3,4)", "kS3#1", "D(kZ3)"}) {
    const BraidedStructures& bs = braided(name);
    const HopfPtr d = dual(bs.qt().algebra());
    const GroupLikes gl = group_likes(*d);
    ASSERT_GT(gl.order(), 1u);
    for (const Vec& chi : gl.elements) {
      const Subspace c = Subspace::span(d->dim(), {chi});
      EXPECT_TRUE(c.contains(bs.coadjoint_coaction(chi).left_legs())) << name;
    }
  }
}

TEST(BraidedLaws, HoldOnExamples) {
  for (const std::string name : {"kS3#0", "kS3#1", "kZ3#1", "A_C2(1,2,3,4)", "A_C2(0,1,0,0)", "D(kZ2)", "D(kZ3)"}) {
    const AxiomReport r = braided(name).verify_braided_laws();
    EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.first_failure()->name);
  }
}

TEST(BraidedMorphism, PhiIsBraidedMorphismOnExamples) {
  for (const std::string name : {"kS3#0", "kS3#2", "kZ15", "A_C2(1,2,3,4)", "A_C2(1,2,2,3)", "D(kZ3)", "k^Z3"}) {
    const AxiomReport r = verify_braided_morphism(braided(name));
    ASSERT_FALSE(r.checks.empty());
    EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.first_failure()->name);
    std::vector<std::string> names;
    for (const AxiomCheck& c : r.checks) names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{"H-linearity", "product", "coproduct", "left-right"}));
  }
}

TEST(RelDeltas, HoldOnExamples) {
  for (const std::string name : {"kS3#0", "kS3#1", "kS3#2", "A_C2(1,2,3,4)", "A_C2(0,1,0,0)", "D(kZ3)"}) {
    const AxiomReport r = verify_rel_deltas(braided(name));
    EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.first_failure()->name);
  }
}
