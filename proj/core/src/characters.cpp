#include "hopfkit/characters.hpp"

#include "hopfkit/constructions.hpp"
#include "hopfkit/hopf_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hopfkit {

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw std::logic_error("characters: no primitive root");
}

using ModMatrix = std::vector<std::vector<i64>>;

/// Kernel of a square matrix over F_p, as column vectors.
std::vector<std::vector<i64>> mod_kernel(ModMatrix a, i64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const i64 inv = invmod(a[r][c], p);
    for (i64& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<i64>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<i64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = mod(-a[i][free], p);
    out.push_back(std::move(v));
  }
  return out;
}

/// Splits the common eigenspaces of the class matrices into lines.
std::vector<std::vector<i64>> split_eigenspaces(const std::vector<ModMatrix>& ms, std::size_t r, i64 p) {
  // Each space is stored as a list of basis vectors (length r).
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> whole;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<i64> v(r, 0);
      v[i] = 1;
      whole.push_back(std::move(v));
    }
    spaces.push_back(std::move(whole));
  }
  for (const ModMatrix& m : ms) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // Coordinates A of M restricted to span(basis): M b_s = sum_t A[t][s] b_t.
      // Solve by row-reducing [B | M B].
      ModMatrix aug(r, std::vector<i64>(2 * d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t i = 0; i < r; ++i) {
          aug[i][s] = basis[s][i];
          i64 acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + m[i][k] * basis[s][k]) % p;
          aug[i][d + s] = acc;
        }
      }
      std::size_t row = 0;
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = row;
        while (piv < r && aug[piv][c] == 0) ++piv;
        if (piv == r) throw std::logic_error("characters: dependent eigenspace basis");
        std::swap(aug[piv], aug[row]);
        const i64 inv = invmod(aug[row][c], p);
        for (i64& x : aug[row]) x = x * inv % p;
        for (std::size_t i = 0; i < r; ++i) {
          if (i == row || aug[i][c] == 0) continue;
          const i64 f = aug[i][c];
          for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] = mod(aug[i][j] - f * aug[row][j], p);
        }
        ++row;
      }
      ModMatrix a(d, std::vector<i64>(d));
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t s = 0; s < d; ++s) a[t][s] = aug[t][d + s];
      }
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
        ModMatrix shifted = a;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = mod(shifted[t][t] - lambda, p);
        const auto ker = mod_kernel(shifted, p);
        if (ker.empty()) continue;
        std::vector<std::vector<i64>> piece;
        for (const auto& coords : ker) {
          std::vector<i64> v(r, 0);
          for (std::size_t s = 0; s < d; ++s) {
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + coords[s] * basis[s][i]) % p;
          }
          piece.push_back(std::move(v));
        }
        found += piece.size();
        next.push_back(std::move(piece));
      }
      if (found != d) throw std::logic_error("characters: class matrix does not split modulo p");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<i64>> lines;
  for (auto& s : spaces) {
    if (s.size() != 1) throw std::logic_error("characters: class matrices do not separate characters");
    lines.push_back(std::move(s.front()));
  }
  return lines;
}

CycloScalar pair(const Vec& p, const Vec& x) {
  CycloScalar s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero() && !x[i].is_zero()) s += p[i] * x[i];
  }
  return s;
}

/// Empty when the set is a complete list of irreducible characters.
std::string validation_failure(const FiniteDimHopf& h, const std::vector<Vec>& chars,
                               std::vector<std::size_t>* degrees) {
  const std::size_t n = h.dim();
  if (chars.empty() || chars.front() != h.counit()) return "chi_0 must be the counit";
  std::vector<std::size_t> degs;
  for (const Vec& chi : chars) {
    if (chi.size() != n) return "character has the wrong length";
    const CycloScalar d = pair(chi, h.unit());
    if (!d.is_rational() || d.to_rational().den() != 1 || d.to_rational().num() <= 0) {
      return "degree is not a positive integer";
    }
    degs.push_back(static_cast<std::size_t>(d.to_rational().num()));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec ab = h.multiply_basis(a, b);
      const Vec ba = h.multiply_basis(b, a);
      for (const Vec& chi : chars) {
        if (pair(chi, ab) != pair(chi, ba)) return "character is not a trace function";
      }
    }
  }
  std::size_t total = 0;
  for (std::size_t d : degs) total += d * d;
  if (total != n) return "sum of squared degrees differs from dim H";

  const Integrals ints = integrals(h);
  const CycloScalar eps = h.epsilon(ints.left);
  if (eps.is_zero()) return "H is not semisimple";
  const Vec lambda = eps.inverse() * ints.left;
  const ExactMatrix d = h.comultiply(lambda).coefficients();
  const ExactMatrix st = h.antipode_matrix().transpose();
  for (std::size_t j = 0; j < chars.size(); ++j) {
    const Vec right = d * (st * chars[j]);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      if (pair(chars[i], right) != CycloScalar(i == j ? 1 : 0)) return "characters are not orthonormal";
    }
  }
  if (degrees) *degrees = std::move(degs);
  return {};
}

CharacterSet finish(const HopfPtr& h, std::vector<Vec> chars, CharacterProvenance prov) {
  auto eps = std::find(chars.begin(), chars.end(), h->counit());
  if (eps != chars.end()) std::rotate(chars.begin(), eps, eps + 1);
  CharacterSet out{h, std::move(chars), {}, prov};
  const std::string why = validation_failure(*h, out.characters, &out.degrees);
  if (!why.empty()) throw std::logic_error("characters: computed set fails validation: " + why);
  return out;
}

CharacterSet group_algebra_characters(const HopfPtr& h, const GroupLikes& gl) {
  const FiniteGroup g = FiniteGroup::from_table(gl.table);
  const CharacterTable t = character_table(g);
  const std::size_t n = h->dim();
  const ExactMatrix mt = ExactMatrix::from_columns(n, gl.elements).transpose();
  std::vector<Vec> chars;
  for (std::size_t c = 0; c < t.values.size(); ++c) {
    Vec w(n);
    for (std::size_t x = 0; x < n; ++x) w[x] = t.value(c, x);
    auto f = solve(mt, w);
    if (!f) throw std::logic_error("characters: group-likes do not form a basis");
    chars.push_back(std::move(*f));
  }
  return finish(h, std::move(chars), CharacterProvenance::GroupExplicit);
}

CharacterSet double_characters(const HopfPtr& h, const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Vec> chars;
  for (const auto& cls : g.conjugacy_classes()) {
    const std::size_t a = cls.front();
    const std::vector<std::size_t> cent = g.centralizer(a);
    const CharacterTable ct = character_table(g.restrict_to(cent));
    std::vector<std::size_t> cent_index(n, n);
    for (std::size_t i = 0; i < cent.size(); ++i) cent_index[cent[i]] = i;
    // t_x with t_x a t_x^-1 = x, the first such element in index order
    std::vector<std::size_t> rep(n, n);
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t x = g.conjugate(t, a);
      if (rep[x] == n) rep[x] = t;
    }
    for (std::size_t rho = 0; rho < ct.values.size(); ++rho) {
      Vec chi(n * n);
      for (std::size_t x : cls) {
        const std::size_t t = rep[x];
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t c = g.mul(g.mul(g.inv(t), y), t);
          if (cent_index[c] != n) chi[x * n + y] = ct.value(rho, cent_index[c]);
        }
      }
      chars.push_back(std::move(chi));
    }
  }
  return finish(h, std::move(chars), CharacterProvenance::DoubleExplicit);
}

}  // namespace

CycloScalar CharacterTable::value(std::size_t chi, std::size_t element) const {
  return values.at(chi).at(class_of.at(element));
}

CharacterTable character_table(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const i64 e = static_cast<i64>(g.exponent());
  CharacterTable t;
  t.classes = g.conjugacy_classes();
  const std::size_t r = t.classes.size();
  t.class_of.assign(n, 0);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t x : t.classes[c]) t.class_of[x] = c;
  }
  const std::size_t id_class = t.class_of[g.identity()];

  i64 p = 2 * static_cast<i64>(n) + 1;
  while (p % e != 1 || !is_prime(p)) ++p;

  // ms[i][j][k] = #{(x, y) in C_i x C_j : x y = rep_k}
  std::vector<ModMatrix> ms(r, ModMatrix(r, std::vector<i64>(r, 0)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t z = g.mul(x, y);
      const std::size_t k = t.class_of[z];
      if (t.classes[k].front() == z) ++ms[t.class_of[x]][t.class_of[y]][k];
    }
  }
  const std::vector<std::vector<i64>> lines = split_eigenspaces(ms, r, p);

  const i64 zeta = powmod(primitive_root(p), (p - 1) / e, p);
  const i64 root_n = static_cast<i64>(std::sqrt(static_cast<double>(n)) + 1);
  for (const auto& line : lines) {
    // omega_c = |C_c| chi(c) / chi(1), normalised so omega(identity) = 1
    const i64 scale = invmod(line[id_class], p);
    std::vector<i64> omega(r);
    for (std::size_t c = 0; c < r; ++c) omega[c] = line[c] * scale % p;
    i64 sum = 0;
    for (std::size_t c = 0; c < r; ++c) {
      const std::size_t inv_c = t.class_of[g.inv(t.classes[c].front())];
      sum = (sum + omega[c] * omega[inv_c] % p * invmod(static_cast<i64>(t.classes[c].size()), p)) % p;
    }
    const i64 d2 = static_cast<i64>(n) % p * invmod(sum, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d <= root_n; ++d) {
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    }
    if (deg == 0) throw std::logic_error("characters: no degree matches modulo p");
    std::vector<i64> chi_p(r);
    for (std::size_t c = 0; c < r; ++c) {
      chi_p[c] = deg * omega[c] % p * invmod(static_cast<i64>(t.classes[c].size()), p) % p;
    }
    std::vector<CycloScalar> values(r);
    for (std::size_t c = 0; c < r; ++c) {
      const std::size_t x = t.classes[c].front();
      const i64 o = static_cast<i64>(g.element_order(x));
      const i64 zo = powmod(zeta, e / o, p);
      CycloScalar v;
      for (i64 k = 0; k < o; ++k) {
        i64 acc = 0;
        std::size_t power = g.identity();
        for (i64 l = 0; l < o; ++l) {
          acc = (acc + chi_p[t.class_of[power]] * powmod(zo, mod(-k * l, o), p)) % p;
          power = g.mul(power, x);
        }
        const i64 mult = acc * invmod(o, p) % p;
        if (mult > deg) throw std::logic_error("characters: eigenvalue multiplicity out of range");
        if (mult != 0) v += CycloScalar(mult) * CycloScalar::root_of_unity(static_cast<int>(o), k);
      }
      values[c] = v;
    }
    t.values.push_back(std::move(values));
    t.degrees.push_back(static_cast<std::size_t>(deg));
  }

  std::vector<std::size_t> order(t.values.size());
  std::iota(order.begin(), order.end(), 0);
  auto trivial = [&](std::size_t i) {
    return std::all_of(t.values[i].begin(), t.values[i].end(), [](const CycloScalar& v) { return v.is_one(); });
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    return t.degrees[a] < t.degrees[b];
  });
  CharacterTable sorted{t.classes, {}, {}, t.class_of};
  for (std::size_t i : order) {
    sorted.values.push_back(t.values[i]);
    sorted.degrees.push_back(t.degrees[i]);
  }

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      CycloScalar s;
      for (std::size_t c = 0; c < r; ++c) {
        s += CycloScalar(static_cast<i64>(t.classes[c].size())) * sorted.values[a][c] * sorted.values[b][c].conj();
      }
      if (s != CycloScalar(a == b ? static_cast<i64>(n) : 0)) throw std::logic_error("characters: orthogonality fails");
    }
  }
  return sorted;
}

const char* provenance_name(CharacterProvenance p) {
  switch (p) {
    case CharacterProvenance::GroupExplicit:
      return "group-explicit";
    case CharacterProvenance::DualGroupExplicit:
      return "dual-group-explicit";
    case CharacterProvenance::DoubleExplicit:
      return "double-explicit";
    case CharacterProvenance::UserSupplied:
      return "user-supplied";
  }
  return "unknown";
}

CharacterSet characters(const HopfPtr& h, const CharacterHint& hint) {
  if (!is_semisimple(*h)) throw CharactersUnavailable("characters unavailable: H is not semisimple");
  using Kind = CharacterHint::Kind;
  if (hint.kind != Kind::Auto && !hint.group) throw StructureError("characters: the hint needs a group");
  switch (hint.kind) {
    case Kind::GroupAlgebra: {
      if (!(*h == *group_algebra(*hint.group))) {
        throw CharactersUnavailable("characters unavailable: H is not the group algebra of the hinted group");
      }
      const CharacterTable t = character_table(*hint.group);
      std::vector<Vec> chars;
      for (std::size_t c = 0; c < t.values.size(); ++c) {
        Vec chi(h->dim());
        for (std::size_t x = 0; x < h->dim(); ++x) chi[x] = t.value(c, x);
        chars.push_back(std::move(chi));
      }
      return finish(h, std::move(chars), CharacterProvenance::GroupExplicit);
    }
    case Kind::DualGroupAlgebra: {
      if (!(*h == *dual_group_algebra(*hint.group))) {
        throw CharactersUnavailable("characters unavailable: H is not the dual group algebra of the hinted group");
      }
      std::vector<Vec> chars;
      for (std::size_t x = 0; x < h->dim(); ++x) chars.push_back(unit_vec(h->dim(), x));
      return finish(h, std::move(chars), CharacterProvenance::DualGroupExplicit);
    }
    case Kind::Double: {
      if (!(*h == *drinfeld_double_algebra(*group_algebra(*hint.group)))) {
        throw CharactersUnavailable("characters unavailable: H is not the double of the hinted group");
      }
      return double_characters(h, *hint.group);
    }
    case Kind::Auto:
      break;
  }
  if (h->is_commutative()) {
    const GroupLikes gl = group_likes(*dual(*h));
    if (gl.order() != h->dim()) throw std::logic_error("characters: commutative semisimple H lacks algebra maps");
    return finish(h, gl.elements, CharacterProvenance::DualGroupExplicit);
  }
  const GroupLikes gl = group_likes(*h);
  if (gl.order() == h->dim()) return group_algebra_characters(h, gl);
  throw CharactersUnavailable("characters unavailable: no exact method applies; supply them explicitly");
}

CharacterSet user_characters(const HopfPtr& h, std::vector<Vec> chars) {
  CharacterSet out{h, std::move(chars), {}, CharacterProvenance::UserSupplied};
  const std::string why = validation_failure(*h, out.characters, &out.degrees);
  if (!why.empty()) throw StructureError("user characters rejected: " + why);
  return out;
}

}  // namespace hopfkit
