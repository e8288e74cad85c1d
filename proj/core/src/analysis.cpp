#include "hopfkit/analysis.hpp"

#include "hopfkit/constructions.hpp"
#include "hopfkit/hopf_ops.hpp"
#include "hopfkit/quotients.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

CycloScalar pair(const Vec& p, const Vec& x) {
  CycloScalar s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero() && !x[i].is_zero()) s += p[i] * x[i];
  }
  return s;
}

/// Functionals f with f(ab) = f(ba) for all a, b.
Subspace trace_functions(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec c = h.multiply_basis(a, b) - h.multiply_basis(b, a);
      if (!is_zero_vec(c)) rows.push_back(std::move(c));
    }
  }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, kernel_basis(ExactMatrix::from_rows(n, rows)));
}

bool square_free(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

ReportItem item(std::string name, bool holds, std::string detail) {
  return ReportItem{std::move(name), holds ? ItemStatus::Pass : ItemStatus::Fail, std::move(detail)};
}

ReportItem not_applicable(std::string name, std::string detail) {
  return ReportItem{std::move(name), ItemStatus::NotApplicable, std::move(detail)};
}

/// The group when the basis of H is a group under multiplication.
std::optional<FiniteGroup> basis_group(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  FiniteGroup::Table table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = h.basis_vector(i);
    if (h.comultiply(e) != TensorElement::outer(e, e)) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec p = h.multiply_basis(i, j);
      std::optional<std::size_t> k;
      for (std::size_t t = 0; t < n; ++t) {
        if (p[t].is_zero()) continue;
        if (k || !p[t].is_one()) return std::nullopt;
        k = t;
      }
      if (!k) return std::nullopt;
      table[i][j] = *k;
    }
  }
  try {
    return FiniteGroup::from_table(std::move(table), h.labels(), h.name());
  } catch (const StructureError&) {
    return std::nullopt;
  }
}

std::size_t pairing_rank(const Bicharacter& rho, bool symmetrise) {
  const std::size_t m = rho.chars.size();
  ExactMatrix mat(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mat(a, b) = symmetrise ? rho.value(a, b) * rho.value(b, a) : rho.value(a, b);
  }
  return rank(mat);
}

}  // namespace

SMatrix s_matrix(const QTPair& qt, const CharacterSet& chars) {
  if (chars.h->dim() != qt.algebra().dim()) throw StructureError("s_matrix: characters belong to another algebra");
  const std::size_t m = chars.size();
  SMatrix s;
  s.entries.assign(m, std::vector<CycloScalar>(m));
  ExactMatrix mat(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec image = qt.phi() * chars.characters[j];
    for (std::size_t i = 0; i < m; ++i) {
      s.entries[i][j] = pair(chars.characters[i], image);
      mat(i, j) = s.entries[i][j];
    }
  }
  s.symmetric = mat == mat.transpose();
  s.nondegenerate = rank(mat) == m;
  s.matches_factorizable = s.nondegenerate == qt.factorizable();
  return s;
}

TransparencyReport transparent_characters(const QTPair& qt, const CharacterSet& chars) {
  const FiniteDimHopf& h = qt.algebra();
  const std::size_t n = h.dim();
  TransparencyReport rep;
  std::vector<Vec> spanning;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const Vec& chi = chars.characters[i];
    if (qt.phi() * chi == pair(chi, h.unit()) * h.unit()) {
      rep.transparent.push_back(i);
      spanning.push_back(chi);
    }
  }
  rep.transparent_span = Subspace::span(n, spanning);
  const CanonicalQuotient cq = canonical_quotient(qt);
  const ExactMatrix& p = cq.presentation.projection.matrix();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < p.rows(); ++a) rows.push_back(p.row(a));
  rep.pulled_back = Subspace::span(n, rows).intersect(trace_functions(h));
  rep.matches = rep.transparent_span == rep.pulled_back;
  return rep;
}

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass:
      return "pass";
    case ItemStatus::Fail:
      return "fail";
    case ItemStatus::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

const ReportItem& ClassificationReport::item(const std::string& name) const {
  for (const ReportItem& i : items) {
    if (i.name == name) return i;
  }
  throw std::out_of_range("no report item named " + name);
}

ClassificationReport classification_report(const QTPair& qt) {
  const FiniteDimHopf& h = qt.algebra();
  const HopfPtr& hp = qt.hopf();
  const std::size_t n = h.dim();
  ClassificationReport rep;

  const bool applies = n % 2 == 1 && square_free(n);
  rep.items.push_back(item("odd square-free dimension", applies, "dim H = " + std::to_string(n)));

  const CycloScalar tr = trace_s_squared(h);
  const bool semisimple = !tr.is_zero();
  const std::string tr_detail = "Tr S^2 = " + tr.to_string();
  rep.items.push_back(applies ? item("semisimple", semisimple, tr_detail) : not_applicable("semisimple", tr_detail));

  const GroupLikes gl = group_likes(h);
  const Subspace kg = Subspace::span(n, gl.elements);
  const bool grouplike_r = kg.contains(qt.r().left_legs()) && kg.contains(qt.r().right_legs());
  rep.items.push_back(
      item("R in kG(H) (x) kG(H)", grouplike_r, "|G(H)| = " + std::to_string(gl.order())));

  if (grouplike_r) {
    const SubspaceHandle k(hp, qt.phi_image());
    const bool ok = k.is_hopf_subalgebra() && k.is_commutative() && k.is_ad_stable();
    rep.items.push_back(item("Phi_R(H*) commutative normal Hopf subalgebra", ok, "dim = " + std::to_string(k.dim())));
    const CanonicalQuotient cq = canonical_quotient(qt);
    const bool exact = cq.k.dim() * cq.presentation.quotient->dim() == n &&
                       cq.presentation.left_coinvariants.space() == cq.presentation.right_coinvariants.space();
    rep.items.push_back(item("exact sequence", exact,
                             std::to_string(cq.k.dim()) + " x " + std::to_string(cq.presentation.quotient->dim())));
  } else {
    rep.items.push_back(not_applicable("Phi_R(H*) commutative normal Hopf subalgebra", "R has non-group-like legs"));
    rep.items.push_back(not_applicable("exact sequence", "R has non-group-like legs"));
  }

  if (qt.h_r().is_commutative()) {
    const SubHopf sub = restrict_to(h, qt.h_r().space());
    const GroupLikes gamma = group_likes(*dual(*sub.algebra));
    bool cyclic = false;
    if (gamma.order() == sub.algebra->dim()) {
      const FiniteGroup g = FiniteGroup::from_table(gamma.table);
      cyclic = g.exponent() == g.order();
    }
    rep.items.push_back(item("H_R commutative with cyclic Gamma", cyclic, "|Gamma| = " + std::to_string(gamma.order())));
  } else {
    rep.items.push_back(item("H_R commutative with cyclic Gamma", false, "H_R is not commutative"));
  }

  const std::optional<FiniteGroup> g = basis_group(h);
  std::optional<Bicharacter> rho;
  if (g) {
    try {
      rho = recover_bicharacter(*g, qt);
    } catch (const StructureError&) {
      rho.reset();
    }
  }
  if (rho) {
    const std::size_t m = rho->chars.size();
    rep.items.push_back(item("bicharacter invariant", !invariance_witness(*g, *rho).has_value(),
                             "|Gamma| = " + std::to_string(m)));
    const std::size_t r1 = pairing_rank(*rho, false);
    rep.items.push_back(item("bicharacter nondegenerate", r1 == m,
                             "rank " + std::to_string(r1) + " of " + std::to_string(m)));
    const std::size_t r2 = pairing_rank(*rho, true);
    rep.items.push_back(item("symmetrised bicharacter nondegenerate", r2 == m,
                             "rank " + std::to_string(r2) + " of " + std::to_string(m)));
  } else {
    for (const char* name :
         {"bicharacter invariant", "bicharacter nondegenerate", "symmetrised bicharacter nondegenerate"}) {
      rep.items.push_back(not_applicable(name, "H is not a group algebra in its group basis"));
    }
  }

  if (applies && qt.triangular()) {
    const bool trivial = qt.r() == h.one_tensor();
    rep.items.push_back(item("triangular branch", trivial && semisimple, trivial ? "R = 1 (x) 1" : "R != 1 (x) 1"));
  } else {
    rep.items.push_back(not_applicable("triangular branch", applies ? "not triangular" : "dimension not odd square-free"));
  }
  return rep;
}

SimpleCorollaryReport simple_corollary_check(const QTPair& qt) {
  const FiniteDimHopf& h = qt.algebra();
  const HopfPtr hd = dual(h);
  const GroupLikes gl = group_likes(*hd);
  SimpleCorollaryReport rep;
  rep.group_likes = gl.order();
  std::vector<Vec> kernel;
  for (const Vec& x : gl.elements) {
    if (qt.f_r().apply(x) == h.unit()) kernel.push_back(x);
  }
  rep.kernel_size = kernel.size();
  rep.injective = kernel.size() == 1;
  rep.order_divides_rank = qt.rank() % gl.order() == 0;
  const SubspaceHandle a(hd, kernel);
  rep.kernel_normal = a.is_hopf_subalgebra() && a.is_ad_stable();
  rep.consistent = rep.injective ? rep.order_divides_rank : rep.kernel_normal;
  return rep;
}

}  // namespace hopfkit
