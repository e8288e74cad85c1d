#pragma once

#include "hopfkit/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hopfkit {

/// Element of V (x) W in the product basis: coeff(i, j) multiplies e_i (x) e_j.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(std::size_t left, std::size_t right) : m_(left, right) {}
  explicit TensorElement(ExactMatrix m) : m_(std::move(m)) {}

  /// v (x) w
  static TensorElement outer(const Vec& v, const Vec& w);

  std::size_t left_dim() const { return m_.rows(); }
  std::size_t right_dim() const { return m_.cols(); }

  CycloScalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  const CycloScalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ExactMatrix& coefficients() const { return m_; }

  struct Entry {
    std::size_t left;
    std::size_t right;
    CycloScalar coeff;
  };
  std::vector<Entry> entries() const;

  /// tau(x (x) y) = y (x) x
  TensorElement flip() const { return TensorElement(m_.transpose()); }
  /// (f (x) g)(this), with f, g given as matrices (column j = image of e_j).
  TensorElement apply(const ExactMatrix& f, const ExactMatrix& g) const;
  /// (f (x) id)(this) and (id (x) g)(this).
  TensorElement apply_left(const ExactMatrix& f) const { return TensorElement(f * m_); }
  TensorElement apply_right(const ExactMatrix& g) const { return TensorElement(m_ * g.transpose()); }
  /// Contract the left leg with a functional: sum_ij coeff(i,j) p(e_i) e_j.
  Vec contract_left(const Vec& p) const;
  /// Contract the right leg with a functional: sum_ij coeff(i,j) q(e_j) e_i.
  Vec contract_right(const Vec& q) const;
  /// Span of the left (resp. right) tensorands.
  Subspace left_legs() const;
  Subspace right_legs() const;
  /// Rank of the tensor as an element of V (x) W.
  std::size_t rank() const { return hopfkit::rank(m_); }

  TensorElement operator+(const TensorElement& o) const { return TensorElement(m_ + o.m_); }
  TensorElement operator-(const TensorElement& o) const { return TensorElement(m_ - o.m_); }
  bool is_zero() const { return m_.is_zero(); }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.m_ == b.m_; }
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

 private:
  ExactMatrix m_;
};

}  // namespace hopfkit
