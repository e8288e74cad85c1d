#pragma once

#include "hopfkit/groups.hpp"
#include "hopfkit/hopf_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hopfkit {

/// Raised when no exact method applies; characters are never guessed.
class CharactersUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Irreducible characters of a finite group, computed by Dixon's method
/// (class matrices split modulo a prime p = 1 mod exp(G), values lifted to
/// Q(zeta_exp)).
struct CharacterTable {
  std::vector<std::vector<std::size_t>> classes;
  /// values[chi][c] = chi(classes[c][0]); trivial character first, then by
  /// degree
  std::vector<std::vector<CycloScalar>> values;
  std::vector<std::size_t> degrees;
  /// class index of every group element
  std::vector<std::size_t> class_of;

  /// Value at an arbitrary group element.
  CycloScalar value(std::size_t chi, std::size_t element) const;
};

CharacterTable character_table(const FiniteGroup& g);

enum class CharacterProvenance { GroupExplicit, DualGroupExplicit, DoubleExplicit, UserSupplied };

const char* provenance_name(CharacterProvenance p);

struct CharacterHint {
  enum class Kind { Auto, GroupAlgebra, DualGroupAlgebra, Double };
  Kind kind = Kind::Auto;
  /// the group G for GroupAlgebra, DualGroupAlgebra (k^G) and Double (D(kG))
  std::optional<FiniteGroup> group;
};

/// Irreducible characters of a semisimple H as vectors in H* (coordinates
/// chi(e_i)), with chi_0 = eps.
struct CharacterSet {
  HopfPtr h;
  std::vector<Vec> characters;
  std::vector<std::size_t> degrees;
  CharacterProvenance provenance = CharacterProvenance::UserSupplied;

  std::size_t size() const { return characters.size(); }
};

/// Auto mode handles commutative H (algebra maps, found as group-likes of H*)
/// and H spanned by group-likes (kG in any basis). The Double hint handles
/// D(kG) built by drinfeld_double_algebra. Throws CharactersUnavailable
/// otherwise, and for non-semisimple H.
CharacterSet characters(const HopfPtr& h, const CharacterHint& hint = {});

/// Validates user-supplied characters: chi_0 = eps, each chi a trace
/// function with positive integer degree, orthonormal under the normalised
/// integral, and sum of squared degrees = dim H. Throws StructureError naming
/// the first failed condition.
CharacterSet user_characters(const HopfPtr& h, std::vector<Vec> chars);

}  // namespace hopfkit
