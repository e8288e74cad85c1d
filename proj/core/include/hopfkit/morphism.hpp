#pragma once

#include "hopfkit/hopf_algebra.hpp"

#include <string>

namespace hopfkit {

/// Linear map between Hopf algebras (column j = image of e_j). The structural
/// flags are computed when the morphism is built, never supplied.
class HopfMorphism {
 public:
  HopfMorphism(HopfPtr source, HopfPtr target, ExactMatrix matrix);

  const HopfPtr& source() const { return source_; }
  const HopfPtr& target() const { return target_; }
  const ExactMatrix& matrix() const { return matrix_; }
  Vec apply(const Vec& v) const { return matrix_ * v; }

  bool is_algebra_map() const { return algebra_; }
  bool is_coalgebra_map() const { return coalgebra_; }
  bool commutes_with_antipode() const { return antipode_; }
  bool is_hopf_map() const { return algebra_ && coalgebra_ && antipode_; }
  bool is_injective() const { return rank_ == source_->dim(); }
  bool is_surjective() const { return rank_ == target_->dim(); }
  std::size_t rank() const { return rank_; }
  /// Description of the first failed structural identity, empty if none.
  const std::string& first_violation() const { return violation_; }

  HopfMorphism compose_after(const HopfMorphism& inner) const;

 private:
  HopfPtr source_;
  HopfPtr target_;
  ExactMatrix matrix_;
  bool algebra_ = false;
  bool coalgebra_ = false;
  bool antipode_ = false;
  std::size_t rank_ = 0;
  std::string violation_;
};

}  // namespace hopfkit
