#pragma once

#include "hopfkit/hopf_algebra.hpp"

#include <string>
#include <vector>

namespace hopfkit {

/// A subspace of a Hopf algebra together with its structural predicates,
/// evaluated once when the handle is built.
class SubspaceHandle {
 public:
  SubspaceHandle(HopfPtr ambient, Subspace space);
  SubspaceHandle(HopfPtr ambient, const std::vector<Vec>& spanning);

  const HopfPtr& ambient() const { return ambient_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Vec>& basis() const { return space_.basis(); }
  bool contains(const Vec& v) const { return space_.contains(v); }

  bool is_subalgebra() const { return subalgebra_; }
  bool is_left_coideal() const { return left_coideal_; }
  bool is_right_coideal() const { return right_coideal_; }
  bool is_subcoalgebra() const { return left_coideal_ && right_coideal_; }
  bool is_ad_stable() const { return ad_stable_; }
  bool is_antipode_stable() const { return s_stable_; }
  bool is_hopf_subalgebra() const { return subalgebra_ && is_subcoalgebra() && s_stable_; }
  /// subalgebra, left coideal and stable under the adjoint action
  bool is_normal_left_coideal_subalgebra() const { return subalgebra_ && left_coideal_ && ad_stable_; }
  bool is_commutative() const { return commutative_; }

  /// Name of the first predicate of {subalgebra, left coideal, ad-stable} that
  /// fails, or empty.
  std::string first_failed_normal_predicate() const;

 private:
  void evaluate();

  HopfPtr ambient_;
  Subspace space_;
  bool subalgebra_ = false;
  bool left_coideal_ = false;
  bool right_coideal_ = false;
  bool ad_stable_ = false;
  bool s_stable_ = false;
  bool commutative_ = false;
};

enum class ClosureMode { Algebra, HopfSubalgebra };

/// Smallest subalgebra (or Hopf subalgebra) containing the generators. The
/// iteration stops after at most dim H rounds.
SubspaceHandle subalgebra_closure(const HopfPtr& h, const std::vector<Vec>& generators,
                                  ClosureMode mode = ClosureMode::Algebra);

/// {x in H : x v = v x for all v in V}
Subspace centralizer(const FiniteDimHopf& h, const Subspace& v);
Subspace center(const FiniteDimHopf& h);

/// Span of products {x y : x in U, y in W}.
Subspace product_span(const FiniteDimHopf& h, const Subspace& u, const Subspace& w);

}  // namespace hopfkit
