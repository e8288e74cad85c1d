#pragma once

#include "hopfkit/tensor.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

/// Raised for malformed structure data: wrong sizes, indices out of range,
/// preconditions of an operation that the caller must establish.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional Hopf algebra given by structure constants in a fixed
/// basis e_0, ..., e_{n-1}. Construction only checks shapes; the Hopf axioms
/// are checked by verify_hopf_axioms. Instances are immutable.
class FiniteDimHopf {
 public:
  struct Term {
    std::uint32_t index;
    CycloScalar coeff;
  };
  struct Term2 {
    std::uint32_t left;
    std::uint32_t right;
    CycloScalar coeff;
  };

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// e_i e_j as sparse terms
  const std::vector<Term>& mult_terms(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  /// Delta(e_i) as sparse terms
  const std::vector<Term2>& comult_terms(std::size_t i) const { return comult_[i]; }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }
  /// column j = S(e_j)
  const ExactMatrix& antipode_matrix() const { return antipode_; }
  /// S^{-1}, when S is invertible.
  const std::optional<ExactMatrix>& antipode_inverse_matrix() const { return antipode_inv_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec multiply_basis(std::size_t i, std::size_t j) const;
  TensorElement comultiply(const Vec& a) const;
  TensorElement comultiply_basis(std::size_t i) const;
  CycloScalar epsilon(const Vec& a) const;
  Vec antipode(const Vec& a) const { return antipode_ * a; }
  /// Matrix of x -> a x (left) and x -> x a (right).
  ExactMatrix left_mult_matrix(const Vec& a) const;
  ExactMatrix right_mult_matrix(const Vec& a) const;
  /// Product in H (x) H.
  TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) const;
  TensorElement one_tensor() const { return TensorElement::outer(unit_, unit_); }
  Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i); }

  bool is_commutative() const;
  bool is_cocommutative() const;

  /// Identical dimension, labels and structure constants.
  friend bool operator==(const FiniteDimHopf& a, const FiniteDimHopf& b);

 private:
  friend class HopfBuilder;
  FiniteDimHopf() = default;

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> mult_;
  Vec unit_;
  std::vector<std::vector<Term2>> comult_;
  Vec counit_;
  ExactMatrix antipode_;
  std::optional<ExactMatrix> antipode_inv_;
};

using HopfPtr = std::shared_ptr<const FiniteDimHopf>;

/// Accumulates structure constants, then freezes them into a FiniteDimHopf.
class HopfBuilder {
 public:
  explicit HopfBuilder(std::size_t dim);

  HopfBuilder& name(std::string n);
  HopfBuilder& labels(std::vector<std::string> l);
  /// e_i e_j += c e_k
  HopfBuilder& mult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c);
  HopfBuilder& mult(std::size_t i, std::size_t j, const Vec& product);
  HopfBuilder& unit(const Vec& u);
  /// Delta(e_i) += c e_j (x) e_k
  HopfBuilder& comult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c);
  HopfBuilder& comult(std::size_t i, const TensorElement& t);
  HopfBuilder& counit(const Vec& e);
  /// S(e_j) += c e_i
  HopfBuilder& antipode(std::size_t j, std::size_t i, const CycloScalar& c);
  HopfBuilder& antipode(const ExactMatrix& s);

  HopfPtr build() const;

 private:
  void check_index(std::size_t i) const;

  std::size_t dim_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vec> mult_;             // n*n dense products
  Vec unit_;
  std::vector<TensorElement> comult_;
  Vec counit_;
  ExactMatrix antipode_;
};

struct AxiomCheck {
  std::string name;
  bool holds = true;
  /// basis indices of the first violation
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  /// first violated identity in the fixed check order, or nullptr
  const AxiomCheck* first_failure() const;
};

/// Checks, in this order: associativity, unit, coassociativity, counit,
/// multiplicativity of the comultiplication, multiplicativity of the counit,
/// antipode.
AxiomReport verify_hopf_axioms(const FiniteDimHopf& h);

/// H* in the dual basis e^0, ..., e^{n-1}.
HopfPtr dual(const FiniteDimHopf& h);
/// Opposite multiplication; antipode S^{-1}.
HopfPtr op(const FiniteDimHopf& h);
/// Opposite comultiplication; antipode S^{-1}.
HopfPtr cop(const FiniteDimHopf& h);
/// Both reversed; antipode S.
HopfPtr op_cop(const FiniteDimHopf& h);

/// Hopf algebra spanned by a subspace that is a Hopf subalgebra, in the basis
/// of the subspace's stored echelon rows. The second member maps new basis
/// coordinates to ambient ones (columns = basis vectors).
struct SubHopf {
  HopfPtr algebra;
  ExactMatrix inclusion;
};
SubHopf restrict_to(const FiniteDimHopf& h, const Subspace& hopf_subalgebra);

}  // namespace hopfkit
