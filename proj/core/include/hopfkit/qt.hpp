#pragma once

#include "hopfkit/morphism.hpp"
#include "hopfkit/subspace.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hopfkit {

/// Raised by QTPair::make when the candidate R-matrix is rejected.
class QtError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DrinfeldElement {
  Vec u;
  bool invertible = false;
  bool group_like = false;
  bool central = false;
  /// S^2(h) u = u h for every basis element h
  bool implements_s_squared = false;
};

struct QtVerification;
QtVerification verify_qt(const HopfPtr& h, const TensorElement& r);

/// A Hopf algebra with a verified R-matrix and every object derived from it.
/// The only way to obtain one is through verify_qt or QTPair::make, so all
/// instances satisfy (QT1)-(QT5). Immutable.
class QTPair {
  struct Key {};

 public:
  /// Verifies and builds; throws QtError naming the first failed check.
  static QTPair make(HopfPtr h, TensorElement r);

  const HopfPtr& hopf() const { return h_; }
  const FiniteDimHopf& algebra() const { return *h_; }
  const TensorElement& r() const { return r_; }
  const TensorElement& r_inverse() const { return r_inv_; }
  const TensorElement& r21() const { return r21_; }
  /// Q = R21 R
  const TensorElement& q() const { return q_; }
  const DrinfeldElement& drinfeld() const { return drinfeld_; }

  /// f_R : H*^cop -> H, p -> <p, R1> R2
  const HopfMorphism& f_r() const { return *f_r_; }
  /// f_R21 : H* -> H^op, p -> <p, R2> R1
  const HopfMorphism& f_r21() const { return *f_r21_; }
  /// Phi_R = f_Q : H* -> H
  const ExactMatrix& phi() const { return phi_; }
  /// f_{Q21} : H* -> H
  const ExactMatrix& phi_left() const { return phi_left_; }

  const SubspaceHandle& h_plus() const { return *h_plus_; }
  const SubspaceHandle& h_minus() const { return *h_minus_; }
  /// H_R = H_- H_+
  const SubspaceHandle& h_r() const { return *h_r_; }
  std::size_t rank() const { return h_plus_->dim(); }
  /// Image of Phi_R.
  const Subspace& phi_image() const { return phi_image_; }

  bool triangular() const { return triangular_; }
  bool factorizable() const { return factorizable_; }
  bool minimal() const { return minimal_; }

  QTPair(Key, HopfPtr h, TensorElement r, TensorElement r_inv);

 private:
  friend QtVerification verify_qt(const HopfPtr& h, const TensorElement& r);

  HopfPtr h_;
  TensorElement r_;
  TensorElement r_inv_;
  TensorElement r21_;
  TensorElement q_;
  DrinfeldElement drinfeld_;
  std::optional<HopfMorphism> f_r_;
  std::optional<HopfMorphism> f_r21_;
  ExactMatrix phi_;
  ExactMatrix phi_left_;
  std::optional<SubspaceHandle> h_plus_;
  std::optional<SubspaceHandle> h_minus_;
  std::optional<SubspaceHandle> h_r_;
  Subspace phi_image_;
  bool triangular_ = false;
  bool factorizable_ = false;
  bool minimal_ = false;
};

/// Outcome of checking a candidate R-matrix. The report lists, in order:
/// shape, invertible, QT1, QT2, QT3, QT4, QT5, antipode relations. Checks
/// after the first failure are still run where meaningful.
struct QtVerification {
  AxiomReport report;
  std::optional<QTPair> pair;
  bool ok() const { return pair.has_value(); }
};

/// Invertibility is decided by a direct solve in H (x) H when dim H <= 12,
/// and by testing (S (x) id)(R) as a two-sided inverse otherwise; both are
/// cross-checked when the solve runs.
QtVerification verify_qt(const HopfPtr& h, const TensorElement& r);

DrinfeldElement drinfeld_element(const FiniteDimHopf& h, const TensorElement& r);

/// (P (x) P)(R) for a surjective Hopf map P out of qt's algebra. The pushed
/// pair is verified, and f_{R_q} = P f_R P^* is asserted.
QTPair push_r(const QTPair& qt, const HopfMorphism& pi);

}  // namespace hopfkit
