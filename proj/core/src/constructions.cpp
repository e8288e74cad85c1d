#include "hopfkit/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hopfkit {

// ------------------------------------------------------------ group algebras

HopfPtr group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  HopfBuilder b(n);
  b.name("k" + (g.name().empty() ? std::string("G") : g.name())).labels(g.labels());
  Vec counit(n, CycloScalar(1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) b.mult(x, y, g.mul(x, y), 1);
    b.comult(x, x, x, 1);
    b.antipode(x, g.inv(x), 1);
  }
  b.unit(unit_vec(n, g.identity())).counit(counit);
  return b.build();
}

HopfPtr dual_group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  HopfBuilder b(n);
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("d_" + l);
  b.name("k^" + (g.name().empty() ? std::string("G") : g.name())).labels(labels);
  for (std::size_t x = 0; x < n; ++x) {
    b.mult(x, x, x, 1);
    for (std::size_t y = 0; y < n; ++y) b.comult(g.mul(x, y), x, y, 1);
    b.antipode(x, g.inv(x), 1);
  }
  b.unit(Vec(n, CycloScalar(1))).counit(unit_vec(n, g.identity()));
  return b.build();
}

// ---------------------------------------------------------------- characters

CycloScalar CharacterGroup::value(std::size_t a, std::size_t i) const {
  return CycloScalar::root_of_unity(static_cast<int>(exponent), static_cast<std::int64_t>(values[a][i]));
}

CharacterGroup character_group(const FiniteGroup& g, const std::vector<std::size_t>& abelian_subgroup) {
  if (!g.is_subgroup(abelian_subgroup)) throw StructureError("character group: subset is not a subgroup");
  const FiniteGroup sub = g.restrict_to(abelian_subgroup);
  if (!sub.is_abelian()) throw StructureError("character group: subgroup is not abelian");
  CharacterGroup c;
  c.subgroup = abelian_subgroup;
  c.exponent = sub.exponent();
  c.values = homomorphisms(sub, FiniteGroup::cyclic(c.exponent));
  if (c.values.size() != sub.order()) throw StructureError("internal error: wrong number of characters");
  const std::size_t m = c.values.size();
  FiniteGroup::Table t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> prod(sub.order());
      for (std::size_t i = 0; i < sub.order(); ++i) prod[i] = (c.values[a][i] + c.values[b][i]) % c.exponent;
      t[a][b] = static_cast<std::size_t>(std::find(c.values.begin(), c.values.end(), prod) - c.values.begin());
    }
  }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("chi" + std::to_string(a));
  c.group = FiniteGroup::from_table(std::move(t), std::move(labels), "dual");
  return c;
}

std::vector<Vec> idempotents(const FiniteGroup& g, const CharacterGroup& chars) {
  const CycloScalar scale = CycloScalar(Rational(1, static_cast<std::int64_t>(chars.subgroup.size())));
  std::vector<Vec> out;
  for (std::size_t a = 0; a < chars.size(); ++a) {
    Vec e = zero_vec(g.order());
    for (std::size_t i = 0; i < chars.subgroup.size(); ++i) {
      e[chars.subgroup[i]] = scale * CycloScalar::root_of_unity(static_cast<int>(chars.exponent),
                                                                -static_cast<std::int64_t>(chars.values[a][i]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

CycloScalar Bicharacter::value(std::size_t a, std::size_t b) const {
  return CycloScalar::root_of_unity(static_cast<int>(chars.exponent), static_cast<std::int64_t>(exponents[a][b]));
}

bool Bicharacter::is_trivial() const {
  for (const auto& row : exponents) {
    for (std::size_t v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::vector<Bicharacter> enumerate_bicharacters(const FiniteGroup& g, const CharacterGroup& chars) {
  // rho(a, b) = b(phi(a)) for a homomorphism phi from the character group to the subgroup
  const FiniteGroup sub = g.restrict_to(chars.subgroup);
  std::vector<Bicharacter> out;
  for (const auto& phi : homomorphisms(chars.group, sub)) {
    Bicharacter rho{chars, {}};
    rho.exponents.assign(chars.size(), std::vector<std::size_t>(chars.size()));
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) rho.exponents[a][b] = chars.values[b][phi[a]];
    }
    out.push_back(std::move(rho));
  }
  std::sort(out.begin(), out.end(), [](const Bicharacter& x, const Bicharacter& y) { return x.exponents < y.exponents; });
  return out;
}

std::size_t act_on_character(const FiniteGroup& g, const CharacterGroup& chars, std::size_t elem, std::size_t a) {
  std::vector<std::size_t> pos(g.order(), g.order());
  for (std::size_t i = 0; i < chars.subgroup.size(); ++i) pos[chars.subgroup[i]] = i;
  std::vector<std::size_t> vals(chars.subgroup.size());
  for (std::size_t i = 0; i < chars.subgroup.size(); ++i) {
    const std::size_t j = pos[g.conjugate(g.inv(elem), chars.subgroup[i])];
    if (j == g.order()) throw StructureError("conjugation leaves the subgroup: it is not normal");
    vals[i] = chars.values[a][j];
  }
  const auto it = std::find(chars.values.begin(), chars.values.end(), vals);
  return static_cast<std::size_t>(it - chars.values.begin());
}

std::optional<InvarianceWitness> invariance_witness(const FiniteGroup& g, const Bicharacter& rho) {
  const std::size_t m = rho.chars.size();
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> moved(m);
    for (std::size_t a = 0; a < m; ++a) moved[a] = act_on_character(g, rho.chars, x, a);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (rho.exponents[moved[a]][moved[b]] != rho.exponents[a][b]) return InvarianceWitness{x, a, b};
      }
    }
  }
  return std::nullopt;
}

TensorElement bicharacter_r_matrix(const FiniteGroup& g, const Bicharacter& rho, bool checked) {
  if (checked) {
    if (auto w = g.normality_witness(rho.chars.subgroup)) {
      throw StructureError("subgroup is not normal: conjugating " + g.labels()[w->second] + " by " +
                           g.labels()[w->first] + " leaves it");
    }
    if (auto w = invariance_witness(g, rho)) {
      throw StructureError("bicharacter is not ad-invariant: element " + g.labels()[w->element] +
                           " moves the value at characters (" + std::to_string(w->a) + "," + std::to_string(w->b) +
                           ")");
    }
  }
  const std::vector<Vec> e = idempotents(g, rho.chars);
  TensorElement r(g.order(), g.order());
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = 0; b < e.size(); ++b) r = r + TensorElement::outer(rho.value(a, b) * e[a], e[b]);
  }
  return r;
}

std::vector<GroupQtStructure> enumerate_qt_group(const FiniteGroup& g) {
  const auto subgroups = g.subgroups();  // refuses orders above the cap
  const HopfPtr kg = group_algebra(g);
  std::vector<GroupQtStructure> out;
  for (const auto& sub : subgroups) {
    if (!g.is_normal(sub) || !g.restrict_to(sub).is_abelian()) continue;
    const CharacterGroup chars = character_group(g, sub);
    for (auto& rho : enumerate_bicharacters(g, chars)) {
      if (invariance_witness(g, rho)) continue;
      TensorElement r = bicharacter_r_matrix(g, rho, false);
      const bool seen = std::any_of(out.begin(), out.end(), [&](const GroupQtStructure& s) { return s.pair.r() == r; });
      if (seen) continue;
      out.push_back(GroupQtStructure{std::move(rho), QTPair::make(kg, std::move(r))});
    }
  }
  return out;
}

Bicharacter recover_bicharacter(const FiniteGroup& g, const QTPair& qt) {
  const FiniteDimHopf& h = qt.algebra();
  if (h.dim() != g.order()) throw StructureError("recover_bicharacter: algebra is not kG for this group");
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (qt.h_r().contains(h.basis_vector(x))) support.push_back(x);
  }
  if (support.size() != qt.h_r().dim() || !g.is_subgroup(support)) {
    throw StructureError("recover_bicharacter: H_R is not spanned by a subgroup");
  }
  const CharacterGroup chars = character_group(g, support);
  // R = sum rho(a, b) e_a (x) e_b and a(e_b) = delta_ab, so rho(a, b) = (a (x) b)(R).
  Bicharacter rho{chars, {}};
  rho.exponents.assign(chars.size(), std::vector<std::size_t>(chars.size()));
  const int e = static_cast<int>(chars.exponent);
  for (std::size_t a = 0; a < chars.size(); ++a) {
    for (std::size_t b = 0; b < chars.size(); ++b) {
      CycloScalar v;
      for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = 0; j < support.size(); ++j) {
          const CycloScalar& c = qt.r()(support[i], support[j]);
          if (!c.is_zero()) v += c * chars.value(a, i) * chars.value(b, j);
        }
      }
      std::size_t k = 0;
      while (k < chars.exponent && CycloScalar::root_of_unity(e, static_cast<std::int64_t>(k)) != v) ++k;
      if (k == chars.exponent) throw StructureError("recover_bicharacter: coefficient is not a root of unity");
      rho.exponents[a][b] = k;
    }
  }
  return rho;
}

// ------------------------------------------------------------- Drinfeld double

namespace {

std::vector<std::string> double_labels(const FiniteDimHopf& a) {
  std::vector<std::string> out;
  for (const auto& f : a.labels()) {
    for (const auto& x : a.labels()) out.push_back(f + "*|" + x);
  }
  return out;
}

}  // namespace

HopfPtr drinfeld_double_algebra(const FiniteDimHopf& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  if (!a.antipode_inverse_matrix()) throw StructureError("double needs an invertible antipode");
  const ExactMatrix& s = a.antipode_matrix();
  const ExactMatrix& sinv = *a.antipode_inverse_matrix();
  const Vec& u = a.unit();
  const Vec& eps = a.counit();
  auto idx = [n](std::size_t f, std::size_t x) { return f * n + x; };

  // coeff of e_k in S(e_p) e_z e_r, stored at [(p*n + r)*n + z][k]
  std::vector<Vec> conj(n * n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const Vec sp = s.column(p);
    for (std::size_t z = 0; z < n; ++z) {
      const Vec spz = a.multiply(sp, a.basis_vector(z));
      for (std::size_t r = 0; r < n; ++r) conj[(p * n + r) * n + z] = a.multiply(spz, a.basis_vector(r));
    }
  }
  // second comultiplication of each basis element
  struct Term3 {
    std::size_t p, q, r;
    CycloScalar c;
  };
  std::vector<std::vector<Term3>> delta2(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : a.comult_terms(j)) {
      for (const auto& t2 : a.comult_terms(t.right)) delta2[j].push_back({t.left, t2.left, t2.right, t.coeff * t2.coeff});
    }
  }

  HopfBuilder b(nn);
  b.name("D(" + a.name() + ")").labels(double_labels(a));
  // (f (x) a)(g (x) b) = (phi * f) (x) a_2 b with phi(z) = g(S(a_1) z a_3)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Vec out = zero_vec(nn);
          for (const auto& t : delta2[j]) {
            const Vec q_l = a.multiply_basis(t.q, l);
            if (is_zero_vec(q_l)) continue;
            Vec psi = zero_vec(n);
            for (std::size_t w = 0; w < n; ++w) {
              for (const auto& d : a.comult_terms(w)) {
                if (d.right != i) continue;
                const CycloScalar& phi = conj[(t.p * n + t.r) * n + d.left][k];
                if (!phi.is_zero()) psi[w] += d.coeff * phi;
              }
            }
            for (std::size_t w = 0; w < n; ++w) {
              if (psi[w].is_zero()) continue;
              const CycloScalar cw = t.c * psi[w];
              for (std::size_t m = 0; m < n; ++m) {
                if (!q_l[m].is_zero()) out[idx(w, m)] += cw * q_l[m];
              }
            }
          }
          b.mult(idx(i, j), idx(k, l), out);
        }
      }
    }
  }
  Vec unit = zero_vec(nn), counit = zero_vec(nn);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t x = 0; x < n; ++x) {
      unit[idx(f, x)] = eps[f] * u[x];
      counit[idx(f, x)] = u[f] * eps[x];
    }
  }
  b.unit(unit).counit(counit);
  // Delta(e^i (x) e_j) = sum (e^k (x) e_p) (x) (e^l (x) e_q) over e_k e_l -> e_i, Delta(e_j) -> e_p (x) e_q
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& m : a.mult_terms(k, l)) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& t : a.comult_terms(j)) b.comult(idx(m.index, j), idx(k, t.left), idx(l, t.right), m.coeff * t.coeff);
        }
      }
    }
  }
  // S(f (x) a) = (eps (x) S(a)) ((f o S^-1) (x) 1)
  const HopfPtr partial = b.build();
  for (std::size_t i = 0; i < n; ++i) {
    Vec dual_part = zero_vec(nn);
    for (std::size_t k = 0; k < n; ++k) {
      if (sinv(i, k).is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x) dual_part[idx(k, x)] += sinv(i, k) * u[x];
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vec a_part = zero_vec(nn);
      for (std::size_t f = 0; f < n; ++f) {
        if (eps[f].is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m) a_part[idx(f, m)] += eps[f] * s(m, j);
      }
      const Vec image = partial->multiply(a_part, dual_part);
      for (std::size_t t = 0; t < nn; ++t) {
        if (!image[t].is_zero()) b.antipode(idx(i, j), t, image[t]);
      }
    }
  }
  return b.build();
}

TensorElement drinfeld_double_r(const FiniteDimHopf& a) {
  const std::size_t n = a.dim();
  TensorElement r(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a.unit()[l].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!a.counit()[k].is_zero()) r(i * n + l, k * n + i) += a.unit()[l] * a.counit()[k];
      }
    }
  }
  return r;
}

QTPair drinfeld_double(const FiniteDimHopf& a) {
  return QTPair::make(drinfeld_double_algebra(a), drinfeld_double_r(a));
}

ExactMatrix double_a_leg(const FiniteDimHopf& a) {
  const std::size_t n = a.dim();
  ExactMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k * n + j, j) = a.counit()[k];
  }
  return m;
}

ExactMatrix double_dual_leg(const FiniteDimHopf& a) {
  const std::size_t n = a.dim();
  ExactMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) m(i * n + l, i) = a.unit()[l];
  }
  return m;
}

// ---------------------------------------------------------- bicrossed product

MatchedPair::MatchedPair(FiniteGroup gamma, FiniteGroup f, FiniteGroup::Table left, FiniteGroup::Table right)
    : gamma_(std::move(gamma)), f_(std::move(f)), left_(std::move(left)), right_(std::move(right)) {
  const std::size_t ng = gamma_.order(), nf = f_.order();
  auto shape_ok = [&](const FiniteGroup::Table& t, std::size_t bound) {
    if (t.size() != ng) return false;
    for (const auto& row : t) {
      if (row.size() != nf) return false;
      for (std::size_t v : row) {
        if (v >= bound) return false;
      }
    }
    return true;
  };
  if (!shape_ok(left_, nf) || !shape_ok(right_, ng)) throw StructureError("matched pair: action tables have the wrong shape");
  auto fail = [](const std::string& what, std::size_t s, std::size_t t, std::size_t x) {
    throw StructureError("matched pair violates " + what + " at (" + std::to_string(s) + "," + std::to_string(t) + "," +
                         std::to_string(x) + ")");
  };
  const std::size_t e = gamma_.identity(), one = f_.identity();
  for (std::size_t s = 0; s < ng; ++s) {
    if (right_[s][one] != s) fail("s <| 1 = s", s, 0, 0);
    if (left_[s][one] != one) fail("s |> 1 = 1", s, 0, 0);
  }
  for (std::size_t x = 0; x < nf; ++x) {
    if (left_[e][x] != x) fail("1 |> x = x", 0, 0, x);
    if (right_[e][x] != e) fail("1 <| x = 1", 0, 0, x);
  }
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t t = 0; t < ng; ++t) {
      for (std::size_t x = 0; x < nf; ++x) {
        if (left_[gamma_.mul(s, t)][x] != left_[s][left_[t][x]]) fail("(st) |> x = s |> (t |> x)", s, t, x);
        if (right_[gamma_.mul(s, t)][x] != gamma_.mul(right_[s][left_[t][x]], right_[t][x])) {
          fail("(st) <| x = (s <| (t |> x))(t <| x)", s, t, x);
        }
      }
    }
    for (std::size_t x = 0; x < nf; ++x) {
      for (std::size_t y = 0; y < nf; ++y) {
        if (right_[right_[s][x]][y] != right_[s][f_.mul(x, y)]) fail("(s <| x) <| y = s <| (xy)", s, x, y);
        if (left_[s][f_.mul(x, y)] != f_.mul(left_[s][x], left_[right_[s][x]][y])) {
          fail("s |> (xy) = (s |> x)((s <| x) |> y)", s, x, y);
        }
      }
    }
  }
}

MatchedPair MatchedPair::from_factorization(const FiniteGroup& sigma, const std::vector<std::size_t>& gamma,
                                            const std::vector<std::size_t>& f) {
  if (!sigma.is_subgroup(gamma) || !sigma.is_subgroup(f)) throw StructureError("factorisation: factors must be subgroups");
  if (gamma.size() * f.size() != sigma.order()) throw StructureError("factorisation: |Gamma||F| != |Sigma|");
  const std::size_t none = sigma.order();
  std::vector<std::pair<std::size_t, std::size_t>> split(sigma.order(), {none, none});
  for (std::size_t y = 0; y < f.size(); ++y) {
    for (std::size_t t = 0; t < gamma.size(); ++t) {
      auto& slot = split[sigma.mul(f[y], gamma[t])];
      if (slot.first != none) throw StructureError("factorisation: F and Gamma intersect nontrivially");
      slot = {y, t};
    }
  }
  FiniteGroup::Table left(gamma.size(), std::vector<std::size_t>(f.size()));
  FiniteGroup::Table right(gamma.size(), std::vector<std::size_t>(f.size()));
  for (std::size_t s = 0; s < gamma.size(); ++s) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      const auto [y, t] = split[sigma.mul(gamma[s], f[x])];
      left[s][x] = y;
      right[s][x] = t;
    }
  }
  return MatchedPair(sigma.restrict_to(gamma), sigma.restrict_to(f), std::move(left), std::move(right));
}

bool MatchedPair::left_action_trivial() const {
  for (std::size_t s = 0; s < gamma_.order(); ++s) {
    for (std::size_t x = 0; x < f_.order(); ++x) {
      if (left_[s][x] != x) return false;
    }
  }
  return true;
}

HopfPtr bicrossed_product(const MatchedPair& d) {
  const FiniteGroup& gam = d.gamma();
  const FiniteGroup& f = d.f();
  const std::size_t ng = gam.order(), nf = f.order();
  auto idx = [nf](std::size_t s, std::size_t x) { return s * nf + x; };
  HopfBuilder b(ng * nf);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t x = 0; x < nf; ++x) labels.push_back("e_" + gam.labels()[s] + "#" + f.labels()[x]);
  }
  b.name("bicrossed product").labels(labels);
  Vec unit = zero_vec(ng * nf), counit = zero_vec(ng * nf);
  for (std::size_t s = 0; s < ng; ++s) {
    unit[idx(s, f.identity())] = 1;
    for (std::size_t x = 0; x < nf; ++x) {
      counit[idx(s, x)] = s == gam.identity() ? 1 : 0;
      for (std::size_t y = 0; y < nf; ++y) b.mult(idx(s, x), idx(d.right(s, x), y), idx(s, f.mul(x, y)), 1);
      for (std::size_t t = 0; t < ng; ++t) {
        // Delta(e_g # x) = sum_{st = g} e_s # (t |> x) (x) e_t # x
        b.comult(idx(gam.mul(s, t), x), idx(s, d.left(t, x)), idx(t, x), 1);
      }
      b.antipode(idx(s, x), idx(gam.inv(d.right(s, x)), f.inv(d.left(s, x))), 1);
    }
  }
  b.unit(unit).counit(counit);
  return b.build();
}

// ------------------------------------------------------------------- A_C2

namespace {

// Linear combination of words in g, x, y.
using WordSum = std::map<std::string, CycloScalar>;

struct Rule {
  const char* lhs;
  int sign;  // 0 kills the word
  const char* rhs;
};

constexpr Rule kRules[] = {
    {"gx", -1, "xg"}, {"gy", -1, "yg"}, {"yx", -1, "xy"}, {"gg", 1, ""}, {"xx", 0, ""}, {"yy", 0, ""},
};

const std::vector<std::string>& ac2_words() {
  static const std::vector<std::string> w{"", "g", "x", "y", "xg", "yg", "xy", "xyg"};
  return w;
}

void add_word(WordSum& s, const std::string& w, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto& v = s[w];
  v += c;
  if (v.is_zero()) s.erase(w);
}

// Rewrites one position of one word; returns false when the sum is reduced.
bool rewrite_once(WordSum& s, bool leftmost) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    const std::string& w = it->first;
    std::size_t best = std::string::npos;
    const Rule* rule = nullptr;
    for (const Rule& r : kRules) {
      const std::size_t pos = leftmost ? w.find(r.lhs) : w.rfind(r.lhs);
      if (pos == std::string::npos) continue;
      if (best == std::string::npos || (leftmost ? pos < best : pos > best)) {
        best = pos;
        rule = &r;
      }
    }
    if (!rule) continue;
    const std::string word = w;
    const CycloScalar c = it->second;
    s.erase(it);
    if (rule->sign != 0) {
      add_word(s, word.substr(0, best) + rule->rhs + word.substr(best + 2), CycloScalar(rule->sign) * c);
    }
    return true;
  }
  return false;
}

WordSum reduce(WordSum s, bool leftmost) {
  while (rewrite_once(s, leftmost)) {
  }
  return s;
}

Vec to_basis(const WordSum& s) {
  const auto& words = ac2_words();
  Vec v = zero_vec(words.size());
  for (const auto& [w, c] : s) {
    const auto it = std::find(words.begin(), words.end(), w);
    if (it == words.end()) throw StructureError("internal error: word " + w + " is not in normal form");
    v[static_cast<std::size_t>(it - words.begin())] += c;
  }
  return v;
}

}  // namespace

bool a_c2_rewriting_confluent() {
  std::vector<std::string> words{""};
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= 5; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : {'g', 'x', 'y'}) next.push_back(w + c);
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  const auto& basis = ac2_words();
  for (const auto& w : words) {
    const WordSum l = reduce({{w, CycloScalar(1)}}, true);
    const WordSum r = reduce({{w, CycloScalar(1)}}, false);
    if (l != r) return false;
    for (const auto& [nf, c] : l) {
      if (std::find(basis.begin(), basis.end(), nf) == basis.end()) return false;
    }
  }
  for (const auto& b : basis) {
    const WordSum l = reduce({{b, CycloScalar(1)}}, true);
    if (l.size() != 1 || l.begin()->first != b) return false;
  }
  return true;
}

HopfPtr a_c2() {
  if (!a_c2_rewriting_confluent()) throw StructureError("internal error: A_C2 rewriting is not confluent");
  const auto& words = ac2_words();
  const std::size_t n = words.size();
  HopfBuilder b(n);
  b.name("A_C2").labels({"1", "g", "x", "y", "xg", "yg", "xy", "xyg"});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult(i, j, to_basis(reduce({{words[i] + words[j], CycloScalar(1)}}, true)));
  }
  b.unit(unit_vec(n, 0));
  const HopfPtr algebra = b.build();

  const std::size_t g = 1, x = 2, y = 3, xg = 4, yg = 5;
  std::map<char, TensorElement> delta;
  delta['g'] = TensorElement::outer(unit_vec(n, g), unit_vec(n, g));
  delta['x'] = TensorElement::outer(unit_vec(n, x), unit_vec(n, g)) + TensorElement::outer(unit_vec(n, 0), unit_vec(n, x));
  delta['y'] = TensorElement::outer(unit_vec(n, y), unit_vec(n, g)) + TensorElement::outer(unit_vec(n, 0), unit_vec(n, y));
  std::map<char, Vec> antipode{{'g', unit_vec(n, g)}, {'x', CycloScalar(-1) * unit_vec(n, xg)}, {'y', CycloScalar(-1) * unit_vec(n, yg)}};
  std::map<char, CycloScalar> counit{{'g', CycloScalar(1)}, {'x', CycloScalar(0)}, {'y', CycloScalar(0)}};

  Vec eps = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    TensorElement d = algebra->one_tensor();
    Vec s = algebra->unit();
    CycloScalar e(1);
    for (char c : words[i]) {
      d = algebra->tensor_multiply(d, delta.at(c));
      s = algebra->multiply(antipode.at(c), s);
      e *= counit.at(c);
    }
    b.comult(i, d);
    for (std::size_t k = 0; k < n; ++k) {
      if (!s[k].is_zero()) b.antipode(i, k, s[k]);
    }
    eps[i] = e;
  }
  b.counit(eps);
  return b.build();
}

TensorElement a_c2_r_family(const CycloScalar& a, const CycloScalar& b, const CycloScalar& c, const CycloScalar& d) {
  const CycloScalar half(Rational(1, 2));
  TensorElement r(8, 8);
  r(0, 0) = half;
  r(0, 1) = half;
  r(1, 0) = half;
  r(1, 1) = -half;
  const CycloScalar ha = half * a, hb = half * b, hc = half * c, hd = half * d;
  // rows x, y, xg, yg against columns x, y, xg, yg
  const std::size_t x = 2, y = 3, xg = 4, yg = 5, xy = 6, xyg = 7;
  r(x, x) = ha, r(x, y) = hb, r(x, xg) = -ha, r(x, yg) = -hb;
  r(y, x) = hc, r(y, y) = hd, r(y, xg) = -hc, r(y, yg) = -hd;
  r(xg, x) = ha, r(xg, y) = hb, r(xg, xg) = ha, r(xg, yg) = hb;
  r(yg, x) = hc, r(yg, y) = hd, r(yg, xg) = hc, r(yg, yg) = hd;
  const CycloScalar top = half * (b * c - a * d);
  r(xy, xy) = top;
  r(xy, xyg) = top;
  r(xyg, xy) = top;
  r(xyg, xyg) = -top;
  return r;
}

}  // namespace hopfkit
