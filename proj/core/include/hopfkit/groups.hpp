#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfkit {

/// Finite group given by its multiplication table. Group axioms are verified
/// when the table is supplied.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Throws StructureError if the table is not a group.
  static FiniteGroup from_table(Table table, std::vector<std::string> labels = {}, std::string name = {});
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0, ..., k-1} in lexicographic order (k <= 5).
  static FiniteGroup symmetric(std::size_t k);
  /// Z_n x| Z_m with b a b^-1 = a^r, element a^i b^j at index i + n j.
  static FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// "Z{n}", "S3", "S4", "Z7xZ3".
  static FiniteGroup builtin(std::string_view name);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const Table& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  bool is_abelian() const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  /// g a g^-1
  std::size_t conjugate(std::size_t g, std::size_t a) const { return mul(mul(g, a), inv(g)); }

  /// Sorted elements of the subgroup generated by gens.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;
  bool is_subgroup(const std::vector<std::size_t>& subset) const;
  /// A pair (g, s) with g s g^-1 outside the subset, if any.
  std::optional<std::pair<std::size_t, std::size_t>> normality_witness(const std::vector<std::size_t>& subgroup) const;
  bool is_normal(const std::vector<std::size_t>& subgroup) const { return !normality_witness(subgroup); }
  /// All subgroups, ordered by size and then lexicographically. Refuses
  /// groups of order above 64.
  std::vector<std::vector<std::size_t>> subgroups() const;
  /// Conjugacy classes ordered by smallest element.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  std::vector<std::size_t> centralizer(std::size_t a) const;
  /// Subgroup as a group in its own right; index i stands for subset[i].
  FiniteGroup restrict_to(const std::vector<std::size_t>& subgroup) const;
  /// Some small generating set, chosen greedily in index order.
  std::vector<std::size_t> generators() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  Table table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
};

inline constexpr std::size_t kMaxEnumeratedGroupOrder = 64;

/// Every homomorphism src -> dst as an image table, in lexicographic order of
/// the images of src's generators.
std::vector<std::vector<std::size_t>> homomorphisms(const FiniteGroup& src, const FiniteGroup& dst);

}  // namespace hopfkit
