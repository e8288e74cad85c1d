#pragma once

#include "hopfkit/characters.hpp"
#include "hopfkit/qt.hpp"

#include <string>
#include <vector>

namespace hopfkit {

/// s_ij = <chi_i, Phi_R(chi_j)>
struct SMatrix {
  std::vector<std::vector<CycloScalar>> entries;
  bool symmetric = false;
  bool nondegenerate = false;
  /// nondegenerate == factorizable
  bool matches_factorizable = false;
};

SMatrix s_matrix(const QTPair& qt, const CharacterSet& chars);

struct TransparencyReport {
  /// indices of the characters with Phi_R(chi) = chi(1) 1
  std::vector<std::size_t> transparent;
  Subspace transparent_span;
  /// pi*(R(H_bar)) for the canonical quotient at C = H*: trace functions of
  /// H that factor through pi
  Subspace pulled_back;
  bool matches = false;
};

TransparencyReport transparent_characters(const QTPair& qt, const CharacterSet& chars);

enum class ItemStatus { Pass, Fail, NotApplicable };

const char* status_name(ItemStatus s);

struct ReportItem {
  std::string name;
  ItemStatus status = ItemStatus::NotApplicable;
  std::string detail;
};

/// Checks the conclusions of the odd square-free classification on one
/// quasitriangular pair. Items, in order: "odd square-free dimension",
/// "semisimple", "R in kG(H) (x) kG(H)", "Phi_R(H*) commutative normal Hopf
/// subalgebra", "exact sequence", "H_R commutative with cyclic Gamma",
/// "bicharacter invariant", "bicharacter nondegenerate",
/// "symmetrised bicharacter nondegenerate", "triangular branch".
struct ClassificationReport {
  std::vector<ReportItem> items;
  const ReportItem& item(const std::string& name) const;
};

ClassificationReport classification_report(const QTPair& qt);

/// f_R restricted to G(H*): its kernel, whether |G(H*)| divides rk R when
/// it is injective, and whether the kernel spans a normal Hopf subalgebra of
/// H* (a witness that H is not simple when it is proper and nontrivial).
struct SimpleCorollaryReport {
  std::size_t group_likes = 0;
  std::size_t kernel_size = 0;
  bool injective = false;
  bool order_divides_rank = false;
  bool kernel_normal = false;
  /// injective, or the kernel is a proper normal Hopf subalgebra witness
  bool consistent = false;
};

SimpleCorollaryReport simple_corollary_check(const QTPair& qt);

}  // namespace hopfkit
