#pragma once

#include "hopfkit/qt.hpp"

#include <vector>

namespace hopfkit {

/// Braided versions of H and H* attached to a quasitriangular pair, stored
/// as explicit tables on the basis.
class BraidedStructures {
 public:
  explicit BraidedStructures(QTPair qt);

  const QTPair& qt() const { return qt_; }

  /// a_1 S(R2) (x) ad_{R1}(a_2)
  TensorElement braided_comultiply(const Vec& a) const;
  const TensorElement& braided_comultiply_basis(std::size_t i) const { return comult_[i]; }

  /// p x q = (S(p_1) p_3 (x) S(q_1))(R) p_2 q_2 in H*
  Vec braided_multiply(const Vec& p, const Vec& q) const;
  const Vec& braided_multiply_basis(std::size_t k, std::size_t l) const { return mult_[k * n_ + l]; }

  /// rho(p) = p_2 (x) S(p_1) p_3 in H* (x) H*
  TensorElement coadjoint_coaction(const Vec& p) const;

  /// Left H-action on H* dual to ad: (h . p)(x) = p(S(h_1) x h_2). Matrix for
  /// h = e_i.
  ExactMatrix coadjoint_action_matrix(std::size_t i) const;

  /// Unit and counit laws plus associativity of the braided product on every
  /// basis triple and coassociativity of the braided coproduct.
  AxiomReport verify_braided_laws() const;

 private:
  QTPair qt_;
  std::size_t n_;
  std::vector<TensorElement> comult_;
  std::vector<Vec> mult_;
  std::vector<TensorElement> coaction_;
};

/// Phi_R as a map of braided Hopf algebras: checks "H-linearity"
/// (Phi(h . p) = ad_h Phi(p)), "product" (Phi(p x q) = Phi(p) Phi(q)) and
/// "coproduct" (braided Delta of Phi(p) = (Phi (x) Phi) Delta(p)), plus
/// "left-right" (f_{Q21} = S Phi_R S*).
AxiomReport verify_braided_morphism(const BraidedStructures& bs);

/// "rel-deltas": Delta(a) = a_1 R2 (x) ad_{R1}(a_2) from the braided
/// coproduct, and "r-identity": r1 R1 (x) S(R2) r2 = 1 (x) 1.
AxiomReport verify_rel_deltas(const BraidedStructures& bs);

}  // namespace hopfkit
