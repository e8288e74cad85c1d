#pragma once

#include "hopfkit/hopf_algebra.hpp"

#include <vector>

namespace hopfkit {

/// ad_h(a) = h_(1) a S(h_(2))
Vec adjoint_action(const FiniteDimHopf& h, const Vec& x, const Vec& a);
/// Matrix of a -> ad_{e_i}(a).
ExactMatrix adjoint_matrix(const FiniteDimHopf& h, std::size_t i);

struct GroupLikes {
  /// identity first, the rest in canonical coordinate order
  std::vector<Vec> elements;
  /// table[a][b] = index of elements[a] * elements[b]
  std::vector<std::vector<std::size_t>> table;
  /// dim H* - dim(Rad H* + commutator ideal): the number of algebra maps
  /// H* -> k over an algebraically closed field
  std::size_t certified_count = 0;
  std::size_t order() const { return elements.size(); }
};

/// All group-like elements, with a completeness certificate. Throws
/// ArithmeticError if the search finds fewer elements than the certificate
/// requires (for instance when coordinates are not 0 or roots of unity).
GroupLikes group_likes(const FiniteDimHopf& h);

/// Jacobson radical via the trace form: {x : Tr(L_{xy}) = 0 for all y}.
Subspace jacobson_radical(const FiniteDimHopf& h);
/// Two-sided ideal generated by all commutators.
Subspace commutator_ideal(const FiniteDimHopf& h);
/// Two-sided ideal generated by a subspace.
Subspace two_sided_ideal(const FiniteDimHopf& h, const Subspace& s);

struct Integrals {
  Vec left;   ///< h L = eps(h) L
  Vec right;  ///< R h = eps(h) R
  /// modular function alpha in H*: L h = alpha(h) L for the left integral L
  Vec alpha;
  /// distinguished group-like g in H: lambda p = p(g) lambda for a left
  /// integral lambda of H*
  Vec g;
  bool unimodular = false;
  bool semisimple = false;
};

/// Integrals normalised so that eps(L) = dim H when eps(L) != 0, otherwise
/// so that the first nonzero coordinate is 1.
Integrals integrals(const FiniteDimHopf& h);

CycloScalar trace_s_squared(const FiniteDimHopf& h);
bool is_semisimple(const FiniteDimHopf& h);

}  // namespace hopfkit
