#pragma once

#include "hopfkit/groups.hpp"
#include "hopfkit/qt.hpp"

#include <cstddef>
#include <vector>

namespace hopfkit {

/// kG with basis the group elements.
HopfPtr group_algebra(const FiniteGroup& g);
/// k^G with basis the delta functions.
HopfPtr dual_group_algebra(const FiniteGroup& g);

/// Character group of an abelian subgroup of G. Character values are powers
/// of zeta_e with e the exponent of the subgroup.
struct CharacterGroup {
  /// the subgroup, as sorted element indices of the ambient group
  std::vector<std::size_t> subgroup;
  std::size_t exponent = 1;
  /// a(subgroup[i]) = zeta_e^values[a][i]; index 0 is the trivial character
  std::vector<std::vector<std::size_t>> values;
  /// pointwise product of characters
  FiniteGroup group;

  std::size_t size() const { return values.size(); }
  CycloScalar value(std::size_t a, std::size_t i) const;
};

/// Throws StructureError if the subset is not an abelian subgroup.
CharacterGroup character_group(const FiniteGroup& g, const std::vector<std::size_t>& abelian_subgroup);

/// e_a = (1/|C|) sum_{s in C} a(s^-1) s in kG, one per character, in
/// character order.
std::vector<Vec> idempotents(const FiniteGroup& g, const CharacterGroup& chars);

/// Bilinear form on a character group with root-of-unity values.
struct Bicharacter {
  CharacterGroup chars;
  /// rho(a, b) = zeta_e^exponents[a][b]
  std::vector<std::vector<std::size_t>> exponents;

  CycloScalar value(std::size_t a, std::size_t b) const;
  bool is_trivial() const;
  friend bool operator==(const Bicharacter& x, const Bicharacter& y) {
    return x.chars.subgroup == y.chars.subgroup && x.exponents == y.exponents;
  }
};

/// All bicharacters on the character group, ordered lexicographically by
/// their exponent tables.
std::vector<Bicharacter> enumerate_bicharacters(const FiniteGroup& g, const CharacterGroup& chars);

/// Conjugation action on characters: (g.a)(s) = a(g^-1 s g).
std::size_t act_on_character(const FiniteGroup& g, const CharacterGroup& chars, std::size_t elem, std::size_t a);

/// (g, a, b) with rho(g.a, g.b) != rho(a, b), if any.
struct InvarianceWitness {
  std::size_t element;
  std::size_t a;
  std::size_t b;
};
std::optional<InvarianceWitness> invariance_witness(const FiniteGroup& g, const Bicharacter& rho);

/// R = sum_{a,b} rho(a, b) e_a (x) e_b in kG (x) kG. With checked set, a
/// non-normal subgroup or a non-invariant form is rejected by StructureError
/// naming a witness.
TensorElement bicharacter_r_matrix(const FiniteGroup& g, const Bicharacter& rho, bool checked = true);

struct GroupQtStructure {
  Bicharacter rho;
  QTPair pair;
};

/// All quasitriangular structures on kG, one per distinct R, ordered by
/// subgroup (size, then elements) and then bicharacter. Refuses groups of
/// order above 64.
std::vector<GroupQtStructure> enumerate_qt_group(const FiniteGroup& g);

/// Reads (Gamma, rho) back from a verified R on kG: Gamma is the set of group
/// elements in H_R and rho comes from the idempotent expansion of R.
Bicharacter recover_bicharacter(const FiniteGroup& g, const QTPair& qt);

/// Drinfeld double D(A) on the basis e^i|e_j (index i*n + j). As a coalgebra
/// it is A* (x) A; the subalgebra A* (x) 1 carries the opposite product of A*.
HopfPtr drinfeld_double_algebra(const FiniteDimHopf& a);
/// sum_i (e^i (x) 1) (x) (eps (x) e_i)
TensorElement drinfeld_double_r(const FiniteDimHopf& a);
QTPair drinfeld_double(const FiniteDimHopf& a);
/// Columns span the copies A = eps (x) A and A* = A* (x) 1 inside D(A).
ExactMatrix double_a_leg(const FiniteDimHopf& a);
ExactMatrix double_dual_leg(const FiniteDimHopf& a);

/// Matched pair of groups with a left action s |> x of Gamma on F and a
/// right action s <| x of F on Gamma. The 2-cocycles are trivial.
class MatchedPair {
 public:
  /// left[s][x] = s |> x in F, right[s][x] = s <| x in Gamma. Throws
  /// StructureError naming the first violated compatibility condition.
  MatchedPair(FiniteGroup gamma, FiniteGroup f, FiniteGroup::Table left, FiniteGroup::Table right);
  /// From an exact factorisation Sigma = F Gamma: s x = (s |> x)(s <| x).
  static MatchedPair from_factorization(const FiniteGroup& sigma, const std::vector<std::size_t>& gamma,
                                        const std::vector<std::size_t>& f);

  const FiniteGroup& gamma() const { return gamma_; }
  const FiniteGroup& f() const { return f_; }
  std::size_t left(std::size_t s, std::size_t x) const { return left_[s][x]; }
  std::size_t right(std::size_t s, std::size_t x) const { return right_[s][x]; }
  bool left_action_trivial() const;

 private:
  FiniteGroup gamma_;
  FiniteGroup f_;
  FiniteGroup::Table left_;
  FiniteGroup::Table right_;
};

/// k^Gamma # kF on the basis e_s#x (index s*|F| + x).
HopfPtr bicrossed_product(const MatchedPair& data);

/// The 8-dimensional algebra generated by g, x, y with g^2 = 1, x^2 = y^2 = 0,
/// gx = -xg, gy = -yg, xy = -yx, g group-like and x, y (g,1)-skew primitive.
/// Basis order: 1, g, x, y, xg, yg, xy, xyg.
HopfPtr a_c2();
/// Exhaustive check that the rewriting rules used by a_c2 reduce every word
/// of length <= 5 to the same normal form under leftmost and rightmost
/// rewriting, and that the normal forms are exactly the basis words.
bool a_c2_rewriting_confluent();
/// Four-parameter family of R-matrices on a_c2(). Q = R21 R equals
/// 1(x)1 + (b-c)(y(x)xg - x(x)yg) - (b-c)^2 xy(x)xy.
TensorElement a_c2_r_family(const CycloScalar& a, const CycloScalar& b, const CycloScalar& c, const CycloScalar& d);

}  // namespace hopfkit
