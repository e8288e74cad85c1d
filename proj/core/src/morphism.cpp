#include "hopfkit/morphism.hpp"

namespace hopfkit {

HopfMorphism::HopfMorphism(HopfPtr source, HopfPtr target, ExactMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!source_ || !target_) throw StructureError("morphism needs source and target");
  const std::size_t n = source_->dim();
  const std::size_t m = target_->dim();
  if (matrix_.rows() != m || matrix_.cols() != n) throw StructureError("morphism matrix has wrong shape");

  const FiniteDimHopf& a = *source_;
  const FiniteDimHopf& b = *target_;
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = matrix_.column(j);

  algebra_ = apply(a.unit()) == b.unit();
  if (!algebra_) violation_ = "f(1) != 1";
  for (std::size_t i = 0; i < n && algebra_; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (apply(a.multiply_basis(i, j)) != b.multiply(img[i], img[j])) {
        algebra_ = false;
        violation_ = "f(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != f(e_i) f(e_j)";
        break;
      }
    }
  }

  coalgebra_ = true;
  for (std::size_t i = 0; i < n && coalgebra_; ++i) {
    if (b.epsilon(img[i]) != a.counit()[i]) {
      coalgebra_ = false;
      if (violation_.empty()) violation_ = "eps(f(e_" + std::to_string(i) + ")) != eps(e_i)";
      break;
    }
    if (a.comultiply_basis(i).apply(matrix_, matrix_) != b.comultiply(img[i])) {
      coalgebra_ = false;
      if (violation_.empty()) violation_ = "(f (x) f) Delta(e_" + std::to_string(i) + ") != Delta(f(e_i))";
    }
  }

  antipode_ = matrix_ * a.antipode_matrix() == b.antipode_matrix() * matrix_;
  if (!antipode_ && violation_.empty()) violation_ = "f S != S f";
  rank_ = hopfkit::rank(matrix_);
}

HopfMorphism HopfMorphism::compose_after(const HopfMorphism& inner) const {
  if (inner.target_.get() != source_.get() && !(*inner.target_ == *source_)) {
    throw StructureError("cannot compose morphisms with mismatched algebras");
  }
  return HopfMorphism(inner.source_, target_, matrix_ * inner.matrix_);
}

}  // namespace hopfkit
