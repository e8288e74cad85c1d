#include "hopfkit/tensor.hpp"

namespace hopfkit {

TensorElement TensorElement::outer(const Vec& v, const Vec& w) {
  TensorElement t(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!w[j].is_zero()) t(i, j) = v[i] * w[j];
    }
  }
  return t;
}

std::vector<TensorElement::Entry> TensorElement::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (!m_(i, j).is_zero()) out.push_back({i, j, m_(i, j)});
    }
  }
  return out;
}

TensorElement TensorElement::apply(const ExactMatrix& f, const ExactMatrix& g) const {
  return TensorElement(f * m_ * g.transpose());
}

Vec TensorElement::contract_left(const Vec& p) const { return m_.transpose() * p; }

Vec TensorElement::contract_right(const Vec& q) const { return m_ * q; }

Subspace TensorElement::left_legs() const {
  Subspace s(m_.rows());
  for (std::size_t j = 0; j < m_.cols(); ++j) s.insert(m_.column(j));
  return s;
}

Subspace TensorElement::right_legs() const {
  Subspace s(m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i) s.insert(m_.row(i));
  return s;
}

}  // namespace hopfkit
