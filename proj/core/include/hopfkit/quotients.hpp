#pragma once

#include "hopfkit/qt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

struct Coinvariants {
  /// H^{co pi} = {h : (id (x) pi) Delta(h) = h (x) 1}
  SubspaceHandle left;
  /// ^{co pi}H = {h : (pi (x) id) Delta(h) = 1 (x) h}
  SubspaceHandle right;
};

/// Throws StructureError unless pi is a surjective Hopf map.
Coinvariants coinvariants(const HopfMorphism& pi);

struct NormalityEvidence {
  bool normal = false;
  Subspace left;
  Subspace right;
  /// H^{co pi} is a right coideal / a subcoalgebra (expected to agree with
  /// normal)
  bool left_is_right_coideal = false;
  bool left_is_subcoalgebra = false;
  /// Only meaningful when normal: H^{co pi} is a Hopf subalgebra and
  /// ker pi = H (H^{co pi})^+.
  bool hopf_subalgebra = false;
  bool kernel_matches = false;
  /// H^{co pi} and ^{co pi}H are the invariants of the left and right
  /// hit actions of B*.
  bool hit_invariants_match = false;
};

NormalityEvidence is_normal_surjection(const HopfMorphism& pi);

/// Empty if the subspace is a Hopf ideal; otherwise the first failing
/// predicate among "two-sided ideal", "counit", "coideal", "antipode".
std::string first_failed_hopf_ideal_predicate(const FiniteDimHopf& h, const Subspace& ideal);

/// L -> H L^+. Throws StructureError naming the failing predicate when L is
/// not a normal left coideal subalgebra.
Subspace takeuchi_ideal(const SubspaceHandle& l);
/// I -> H^{co H/I}. Throws StructureError naming the failing predicate when
/// I is not a Hopf ideal.
SubspaceHandle takeuchi_coideal(const HopfPtr& h, const Subspace& ideal);

/// H/I on the lexicographically first set of basis vectors completing a
/// basis of I.
struct QuotientPresentation {
  HopfPtr source;
  Subspace ideal;
  /// ambient basis indices whose images form the quotient basis
  std::vector<std::size_t> complement;
  HopfPtr quotient;
  HopfMorphism projection;
  std::optional<TensorElement> pushed_r;
  SubspaceHandle left_coinvariants;
  SubspaceHandle right_coinvariants;
};

QuotientPresentation quotient_by_ideal(const HopfPtr& h, const Subspace& ideal);
/// H/HL^+ for a normal left coideal subalgebra L.
QuotientPresentation quotient_by(const SubspaceHandle& l);

/// The quotient attached to a subcoalgebra C of H*.
struct CanonicalQuotient {
  Subspace c;
  /// Phi_R(C)
  SubspaceHandle phi_c;
  /// K_C = k[Phi_R(C)]
  SubspaceHandle k;
  QuotientPresentation presentation;
  /// (H_C, (pi (x) pi)(R))
  QTPair quotient_qt;
  /// "left-coid", "coinvariants", "right coinvariants", "c-radical",
  /// "freeness", "drinfeld element", "inside H_R"; for C = H* also "image",
  /// "right image", "radical", "triangular".
  AxiomReport checks;
};

/// Throws StructureError if C is not a subcoalgebra of H*.
CanonicalQuotient canonical_quotient(const QTPair& qt, const Subspace& c);
/// C = H*.
CanonicalQuotient canonical_quotient(const QTPair& qt);

/// Whether t factors through pi_C, i.e. ker pi_C is inside ker t. Throws
/// StructureError if (p (x) t)(Q) != p(1)1 for some basis element p of C.
bool maximality_check(const QTPair& qt, const CanonicalQuotient& cq, const HopfMorphism& t);

/// The map tau with tau pi_from = pi_to, when ker pi_from is inside
/// ker pi_to. Both presentations must share the source.
std::optional<HopfMorphism> factor_through(const QuotientPresentation& from, const QuotientPresentation& to);

struct NamedFlag {
  std::string name;
  bool value = false;
};

struct NormalityReport {
  NormalityEvidence evidence;
  /// True when H^{co pi} = Phi_R(H*), so pi is the canonical quotient.
  bool canonical = false;
  /// cond-norm, inclusion, coprimos, centraliz, normalidad (a)-(d),
  /// R_q trivial, f_R(B*) coinvariant, f_R21(B*) coinvariant
  std::vector<NamedFlag> conditions;
  /// Each sufficient condition implies normality, the centralizer condition
  /// is equivalent to it, and the three R_q conditions agree.
  AxiomReport implications;

  bool condition(const std::string& name) const;
};

NormalityReport normality_criteria(const QTPair& qt, const HopfMorphism& pi);

/// For the canonical quotient at C = H*: "kernel" (ker Phi_R equals the
/// right ideal generated by the augmentation of H_bar*), "central group-likes",
/// "injective" and "modular".
AxiomReport central_gl_report(const QTPair& qt, const CanonicalQuotient& full);

struct IndexReport {
  /// B = (H_A)* inside H*
  Subspace b;
  /// "index divides", "trivial on intersection", "whole iff trivial",
  /// "inside H_R", "rs-min divides", "rs-min sequence", "minimality transfer";
  /// when factorizable also "complement dimension" and "complement
  /// intersection".
  AxiomReport checks;
};

/// Throws StructureError unless A is a Hopf subalgebra of H*.
IndexReport index_reports(const QTPair& qt, const Subspace& a);

}  // namespace hopfkit
