#include "hopfkit/quotients.hpp"

#include "hopfkit/hopf_ops.hpp"

#include <numeric>
#include <stdexcept>

namespace hopfkit {

namespace {

void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("quotients: ") + what);
}

CycloScalar pair(const Vec& p, const Vec& x) {
  CycloScalar s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero() && !x[i].is_zero()) s += p[i] * x[i];
  }
  return s;
}

Subspace column_span(const ExactMatrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

Subspace row_span(const ExactMatrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::span(m.cols(), rows);
}

/// Basis of {v in V : f(v) = 0} for V spanned by the given basis.
std::vector<Vec> kernel_of_functional(const std::vector<Vec>& basis, const Vec& f) {
  std::vector<Vec> out;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!pair(f, basis[i]).is_zero()) {
      pivot = i;
      break;
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (pivot && i == *pivot) continue;
    Vec v = basis[i];
    if (pivot) axpy(v, -(pair(f, basis[i]) / pair(f, basis[*pivot])), basis[*pivot]);
    out.push_back(std::move(v));
  }
  return out;
}

struct LinearQuotient {
  std::vector<std::size_t> complement;
  /// H -> H/I in coordinates of the complement
  ExactMatrix p;
};

LinearQuotient linear_quotient(const Subspace& ideal) {
  const std::size_t n = ideal.ambient_dim();
  LinearQuotient q;
  Subspace grown = ideal;
  for (std::size_t i = 0; i < n; ++i) {
    if (grown.insert(unit_vec(n, i))) q.complement.push_back(i);
  }
  std::vector<Vec> cols = ideal.basis();
  for (std::size_t c : q.complement) cols.push_back(unit_vec(n, c));
  const ExactMatrix binv = inverse(ExactMatrix::from_columns(n, cols));
  const std::size_t m = q.complement.size();
  q.p = ExactMatrix(m, n);
  for (std::size_t a = 0; a < m; ++a) q.p.set_row(a, binv.row(ideal.dim() + a));
  return q;
}

/// Kernel of h -> (id (x) p) Delta(h) - h (x) u (left) or its mirror.
Subspace coinvariant_space(const FiniteDimHopf& h, const ExactMatrix& p, bool left) {
  const std::size_t n = h.dim();
  const std::size_t m = p.rows();
  const Vec u = p * h.unit();
  ExactMatrix big(n * m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorElement d = h.comultiply_basis(i);
    TensorElement t = left ? d.apply_right(p) - TensorElement::outer(h.basis_vector(i), u)
                           : d.apply_left(p) - TensorElement::outer(u, h.basis_vector(i));
    for (std::size_t r = 0; r < t.left_dim(); ++r) {
      for (std::size_t c = 0; c < t.right_dim(); ++c) big(r * t.right_dim() + c, i) = t(r, c);
    }
  }
  return Subspace::span(n, kernel_basis(big));
}

void require_surjective_hopf(const HopfMorphism& pi, const char* op) {
  if (!pi.is_hopf_map() || !pi.is_surjective()) {
    throw StructureError(std::string(op) + ": the map is not a surjective Hopf map");
  }
}

bool images_inside(const ExactMatrix& f, const ExactMatrix& pt, const Subspace& target) {
  const ExactMatrix img = f * pt;
  for (std::size_t j = 0; j < img.cols(); ++j) {
    if (!target.contains(img.column(j))) return false;
  }
  return true;
}

AxiomCheck check(std::string name, bool holds, std::string detail = {}) {
  return AxiomCheck{std::move(name), holds, {}, holds ? std::string{} : std::move(detail)};
}

bool commutes_with_basis(const FiniteDimHopf& h, const Vec& a) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec e = h.basis_vector(i);
    if (h.multiply(a, e) != h.multiply(e, a)) return false;
  }
  return true;
}

}  // namespace

Coinvariants coinvariants(const HopfMorphism& pi) {
  require_surjective_hopf(pi, "coinvariants");
  const HopfPtr& h = pi.source();
  return Coinvariants{SubspaceHandle(h, coinvariant_space(*h, pi.matrix(), true)),
                      SubspaceHandle(h, coinvariant_space(*h, pi.matrix(), false))};
}

NormalityEvidence is_normal_surjection(const HopfMorphism& pi) {
  const Coinvariants co = coinvariants(pi);
  const FiniteDimHopf& h = *pi.source();
  const ExactMatrix& p = pi.matrix();
  NormalityEvidence ev;
  ev.left = co.left.space();
  ev.right = co.right.space();
  ev.normal = ev.left == ev.right;
  ev.left_is_right_coideal = co.left.is_right_coideal();
  ev.left_is_subcoalgebra = co.left.is_subcoalgebra();
  if (ev.normal) {
    ev.hopf_subalgebra = co.left.is_hopf_subalgebra();
    ev.kernel_matches = Subspace::span(h.dim(), kernel_basis(p)) == takeuchi_ideal(co.left);
  }

  // f -> h = <f, pi h_2> h_1 and h <- f = <f, pi h_1> h_2 for the dual basis
  // of B; invariance means f -> h = f(1) h.
  const Vec u = p * h.unit();
  const std::size_t n = h.dim();
  const std::size_t m = p.rows();
  ExactMatrix left_map(n * m, n);
  ExactMatrix right_map(n * m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorElement d = h.comultiply_basis(i);
    for (std::size_t a = 0; a < m; ++a) {
      const Vec f = p.row(a);
      Vec l = d.contract_right(f);
      Vec r = d.contract_left(f);
      l[i] -= u[a];
      r[i] -= u[a];
      for (std::size_t k = 0; k < n; ++k) {
        left_map(a * n + k, i) = l[k];
        right_map(a * n + k, i) = r[k];
      }
    }
  }
  ev.hit_invariants_match = Subspace::span(n, kernel_basis(left_map)) == ev.left &&
                            Subspace::span(n, kernel_basis(right_map)) == ev.right;
  return ev;
}

std::string first_failed_hopf_ideal_predicate(const FiniteDimHopf& h, const Subspace& ideal) {
  const std::size_t n = h.dim();
  if (ideal.ambient_dim() != n) throw StructureError("hopf ideal: ambient dimension mismatch");
  for (const Vec& v : ideal.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = h.basis_vector(i);
      if (!ideal.contains(h.multiply(e, v)) || !ideal.contains(h.multiply(v, e))) return "two-sided ideal";
    }
  }
  for (const Vec& v : ideal.basis()) {
    if (!h.epsilon(v).is_zero()) return "counit";
  }
  const LinearQuotient q = linear_quotient(ideal);
  for (const Vec& v : ideal.basis()) {
    if (!h.comultiply(v).apply(q.p, q.p).is_zero()) return "coideal";
  }
  for (const Vec& v : ideal.basis()) {
    if (!ideal.contains(h.antipode(v))) return "antipode";
  }
  return {};
}

Subspace takeuchi_ideal(const SubspaceHandle& l) {
  const std::string failed = l.first_failed_normal_predicate();
  if (!failed.empty()) {
    throw StructureError("takeuchi: not a normal left coideal subalgebra (" + failed + " fails)");
  }
  const FiniteDimHopf& h = *l.ambient();
  const std::size_t n = h.dim();
  const std::vector<Vec> plus = kernel_of_functional(l.basis(), h.counit());

  Subspace ideal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = h.basis_vector(i);
    for (const Vec& y : plus) ideal.insert(h.multiply(e, y));
  }
  // A second round of products on both sides must not enlarge the span.
  Subspace again = ideal;
  for (const Vec& v : ideal.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = h.basis_vector(i);
      again.insert(h.multiply(e, v));
      again.insert(h.multiply(v, e));
    }
  }
  ensure(again == ideal, "second closure round of H L^+ enlarged the span");
  ensure(first_failed_hopf_ideal_predicate(h, ideal).empty(), "H L^+ is not a Hopf ideal");
  return ideal;
}

SubspaceHandle takeuchi_coideal(const HopfPtr& h, const Subspace& ideal) {
  return quotient_by_ideal(h, ideal).left_coinvariants;
}

QuotientPresentation quotient_by_ideal(const HopfPtr& h, const Subspace& ideal) {
  const std::string failed = first_failed_hopf_ideal_predicate(*h, ideal);
  if (!failed.empty()) throw StructureError("quotient: not a Hopf ideal (" + failed + " fails)");
  const std::size_t n = h->dim();
  const LinearQuotient lq = linear_quotient(ideal);
  const ExactMatrix& p = lq.p;
  const std::size_t m = lq.complement.size();

  std::vector<std::string> labels;
  for (std::size_t c : lq.complement) labels.push_back(h->labels()[c]);
  HopfBuilder b(m);
  b.name(ideal.dim() == 0 ? h->name() : h->name() + "/I").labels(std::move(labels));
  ExactMatrix emb(n, m);
  Vec counit(m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t ca = lq.complement[a];
    emb(ca, a) = CycloScalar(1);
    counit[a] = h->counit()[ca];
    for (std::size_t bb = 0; bb < m; ++bb) b.mult(a, bb, p * h->multiply_basis(ca, lq.complement[bb]));
    b.comult(a, h->comultiply_basis(ca).apply(p, p));
  }
  b.unit(p * h->unit()).counit(counit).antipode(p * h->antipode_matrix() * emb);
  HopfPtr quotient = b.build();
  ensure(verify_hopf_axioms(*quotient).ok(), "induced structure on H/I is not a Hopf algebra");

  HopfMorphism proj(h, quotient, p);
  ensure(proj.is_hopf_map() && proj.is_surjective(), "projection is not a surjective Hopf map");
  ensure(Subspace::span(n, kernel_basis(p)) == ideal, "kernel of the projection differs from I");
  Coinvariants co = coinvariants(proj);
  return QuotientPresentation{h,
                              ideal,
                              lq.complement,
                              std::move(quotient),
                              std::move(proj),
                              std::nullopt,
                              std::move(co.left),
                              std::move(co.right)};
}

QuotientPresentation quotient_by(const SubspaceHandle& l) {
  QuotientPresentation q = quotient_by_ideal(l.ambient(), takeuchi_ideal(l));
  ensure(q.left_coinvariants.space().contains(l.space()), "L is not inside H^{co pi}");
  return q;
}

CanonicalQuotient canonical_quotient(const QTPair& qt, const Subspace& c) {
  const HopfPtr& hp = qt.hopf();
  const FiniteDimHopf& h = *hp;
  const std::size_t n = h.dim();
  if (c.ambient_dim() != n) throw StructureError("canonical quotient: C must live in H*");
  const bool whole = c.dim() == n;
  if (!whole) {
    const HopfPtr hd = dual(h);
    for (std::size_t i = 0; i < c.dim(); ++i) {
      const TensorElement d = hd->comultiply(c.basis()[i]);
      if (!c.contains(d.left_legs()) || !c.contains(d.right_legs())) {
        throw StructureError("canonical quotient: C is not a subcoalgebra of H*; the coproduct of basis vector " +
                             std::to_string(i) + " of C leaves C (x) C");
      }
    }
  }

  std::vector<Vec> images;
  for (const Vec& p : c.basis()) images.push_back(qt.phi() * p);
  SubspaceHandle phi_c(hp, images);
  std::vector<Vec> gens = phi_c.basis();
  gens.push_back(h.unit());
  SubspaceHandle k = subalgebra_closure(hp, gens);
  QuotientPresentation pres = quotient_by(k);
  QTPair bar = push_r(qt, pres.projection);
  pres.pushed_r = bar.r();

  const ExactMatrix& p = pres.projection.matrix();
  const Vec pu = p * h.unit();
  AxiomReport rep;
  rep.checks.push_back(check("left-coid", phi_c.is_left_coideal() && phi_c.is_ad_stable(),
                             "Phi_R(C) is not a normal left coideal"));
  rep.checks.push_back(check("coinvariants", pres.left_coinvariants.space() == k.space(), "K_C != H^{co pi}"));

  const ExactMatrix s_inv_dual =
      (h.antipode_inverse_matrix() ? *h.antipode_inverse_matrix() : inverse(h.antipode_matrix())).transpose();
  std::vector<Vec> right_gens;
  for (const Vec& q : c.basis()) right_gens.push_back(qt.phi_left() * (s_inv_dual * q));
  right_gens.push_back(h.unit());
  rep.checks.push_back(check("right coinvariants",
                             subalgebra_closure(hp, right_gens).space() == pres.right_coinvariants.space(),
                             "k[rPhi(S^-1 C)] != ^{co pi}H"));

  bool c_radical = true;
  for (const Vec& q : c.basis()) {
    if (p * qt.q().contract_left(q) != pair(q, h.unit()) * pu) c_radical = false;
  }
  rep.checks.push_back(check("c-radical", c_radical, "(p (x) pi)(Q) != p(1)1"));
  rep.checks.push_back(check("freeness", n == k.dim() * pres.quotient->dim(), "dim H != dim K dim H_C"));
  rep.checks.push_back(check("drinfeld element", p * qt.drinfeld().u == bar.drinfeld().u, "pi(u) != u_bar"));
  rep.checks.push_back(check("inside H_R", qt.h_r().space().contains(k.space()), "K_C is not inside H_R"));
  if (whole) {
    rep.checks.push_back(check("image", qt.phi_image() == pres.left_coinvariants.space(), "Phi_R(H*) != H^{co pi}"));
    rep.checks.push_back(
        check("right image", column_span(qt.phi_left()) == pres.right_coinvariants.space(), "rPhi(H*) != ^{co pi}H"));
    const bool radical = qt.q().apply_left(p) == TensorElement::outer(pu, h.unit()) &&
                         qt.q().apply_right(p) == TensorElement::outer(h.unit(), pu);
    rep.checks.push_back(check("radical", radical, "(pi (x) id)(Q) or (id (x) pi)(Q) is not 1 (x) 1"));
    rep.checks.push_back(check("triangular", bar.triangular(), "the quotient pair is not triangular"));
  }
  return CanonicalQuotient{c, std::move(phi_c), std::move(k), std::move(pres), std::move(bar), std::move(rep)};
}

CanonicalQuotient canonical_quotient(const QTPair& qt) {
  return canonical_quotient(qt, Subspace::whole(qt.algebra().dim()));
}

bool maximality_check(const QTPair& qt, const CanonicalQuotient& cq, const HopfMorphism& t) {
  require_surjective_hopf(t, "maximality");
  const FiniteDimHopf& h = qt.algebra();
  if (t.source()->dim() != h.dim()) throw StructureError("maximality: t does not start at H");
  const Vec tu = t.apply(h.unit());
  for (std::size_t i = 0; i < cq.c.dim(); ++i) {
    const Vec& q = cq.c.basis()[i];
    if (t.apply(qt.q().contract_left(q)) != pair(q, h.unit()) * tu) {
      throw StructureError("maximality: (p (x) t)(Q) != p(1)1 for basis element " + std::to_string(i) + " of C");
    }
  }
  for (const Vec& v : cq.presentation.ideal.basis()) {
    if (!is_zero_vec(t.apply(v))) return false;
  }
  return true;
}

std::optional<HopfMorphism> factor_through(const QuotientPresentation& from, const QuotientPresentation& to) {
  if (from.source->dim() != to.source->dim()) throw StructureError("factor_through: different sources");
  const ExactMatrix& pt = to.projection.matrix();
  for (const Vec& v : from.ideal.basis()) {
    if (!is_zero_vec(pt * v)) return std::nullopt;
  }
  ExactMatrix tau(pt.rows(), from.complement.size());
  for (std::size_t a = 0; a < from.complement.size(); ++a) tau.set_column(a, pt.column(from.complement[a]));
  ensure(tau * from.projection.matrix() == pt, "factor map does not commute with the projections");
  HopfMorphism m(from.quotient, to.quotient, std::move(tau));
  ensure(m.is_hopf_map() && m.is_surjective(), "factor map is not a surjective Hopf map");
  return m;
}

bool NormalityReport::condition(const std::string& name) const {
  for (const NamedFlag& f : conditions) {
    if (f.name == name) return f.value;
  }
  throw std::out_of_range("no normality condition named " + name);
}

NormalityReport normality_criteria(const QTPair& qt, const HopfMorphism& pi) {
  const FiniteDimHopf& h = qt.algebra();
  if (pi.source()->dim() != h.dim()) throw StructureError("normality: the map does not start at H");
  NormalityReport rep;
  rep.evidence = is_normal_surjection(pi);
  const Subspace& lc = rep.evidence.left;
  const Subspace& rc = rep.evidence.right;
  const ExactMatrix& p = pi.matrix();
  const ExactMatrix pt = p.transpose();
  const std::size_t m = p.rows();
  rep.canonical = lc == qt.phi_image();

  const bool inclusion = lc.contains(qt.h_plus().space());
  const bool cond_norm = lc.contains(qt.r().right_legs());
  const bool coprime = std::gcd(m, qt.rank()) == 1;
  const bool centraliz = images_inside(qt.f_r21().matrix(), pt, centralizer(h, lc));
  const bool commute = qt.q() == h.tensor_multiply(qt.r(), qt.r21());
  const Vec pu = p * h.unit();
  const bool rq_trivial = qt.r().apply(p, p) == TensorElement::outer(pu, pu);
  const Subspace both = lc.intersect(rc);
  const bool lc_commutative = SubspaceHandle(qt.hopf(), lc).is_commutative();

  rep.conditions = {
      {"cond-norm", cond_norm},
      {"inclusion", inclusion},
      {"coprimos", coprime},
      {"centraliz", centraliz},
      {"normalidad-a", inclusion},
      {"normalidad-b", commute},
      {"normalidad-c", rq_trivial && lc_commutative},
      {"normalidad-d", rq_trivial && std::gcd(lc.dim(), m) == 1},
      {"rq-trivial", rq_trivial},
      {"f_R coinvariant", images_inside(qt.f_r().matrix(), pt, both)},
      {"f_R21 coinvariant", images_inside(qt.f_r21().matrix(), pt, both)},
  };

  const bool normal = rep.evidence.normal;
  for (const char* name : {"cond-norm", "inclusion", "coprimos", "normalidad-a", "normalidad-c", "normalidad-d"}) {
    rep.implications.checks.push_back(check(name, !rep.condition(name) || normal, "condition holds but pi is not normal"));
  }
  rep.implications.checks.push_back(check("normalidad-b", !(commute && rep.canonical) || normal,
                                          "R21 R = R R21 but the canonical quotient is not normal"));
  rep.implications.checks.push_back(check("centraliz", centraliz == normal, "centralizer criterion disagrees"));
  rep.implications.checks.push_back(
      check("rq-equivalence",
            rq_trivial == rep.condition("f_R coinvariant") && rq_trivial == rep.condition("f_R21 coinvariant"),
            "the three R_q triviality conditions disagree"));
  rep.implications.checks.push_back(check("lcs-rcs", normal == rep.evidence.left_is_right_coideal &&
                                                         normal == rep.evidence.left_is_subcoalgebra,
                                          "normality, right coideal and subcoalgebra disagree"));
  return rep;
}

AxiomReport central_gl_report(const QTPair& qt, const CanonicalQuotient& full) {
  const FiniteDimHopf& h = qt.algebra();
  const std::size_t n = h.dim();
  if (full.c.dim() != n) throw StructureError("central-gl: needs the canonical quotient at C = H*");
  const HopfPtr hd = dual(h);
  const Subspace bar_dual = row_span(full.presentation.projection.matrix());
  const Subspace aug = Subspace::span(n, kernel_of_functional(bar_dual.basis(), h.unit()));
  const Subspace generated = product_span(*hd, aug, Subspace::whole(n));
  const Subspace ker_phi = Subspace::span(n, kernel_basis(qt.phi()));

  AxiomReport rep;
  rep.checks.push_back(check("kernel", ker_phi == generated, "ker Phi_R != (H_bar*)^+ H*"));

  const GroupLikes g = group_likes(*hd);
  std::vector<Vec> images;
  bool central = true;
  for (const Vec& x : g.elements) {
    Vec a = qt.phi() * x;
    if (h.comultiply(a) != TensorElement::outer(a, a) || !h.epsilon(a).is_one() || !commutes_with_basis(h, a)) {
      central = false;
    }
    images.push_back(std::move(a));
  }
  rep.checks.push_back(check("central group-likes", central, "Phi_R(G(H*)) is not inside G(H) and Z(H)"));

  bool injective = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if ((images[a] == h.unit()) != bar_dual.contains(g.elements[a])) injective = false;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (images[g.table[a][b]] != h.multiply(images[a], images[b])) injective = false;
    }
  }
  rep.checks.push_back(check("injective", injective, "Phi_R on G(H*)/G(H_bar*) is not an injective homomorphism"));
  rep.checks.push_back(check("modular", bar_dual.contains(integrals(h).alpha), "alpha is not in H_bar*"));
  return rep;
}

IndexReport index_reports(const QTPair& qt, const Subspace& a) {
  const FiniteDimHopf& h = qt.algebra();
  const std::size_t n = h.dim();
  if (a.ambient_dim() != n || !SubspaceHandle(dual(h), a).is_hopf_subalgebra()) {
    throw StructureError("index: A is not a Hopf subalgebra of H*");
  }
  const CanonicalQuotient cq = canonical_quotient(qt, a);
  const CanonicalQuotient full = canonical_quotient(qt);
  IndexReport rep;
  rep.b = row_span(cq.presentation.projection.matrix());
  const std::size_t dim_bar = cq.presentation.quotient->dim();

  auto trivial_on = [&](const Subspace& s) {
    for (const Vec& v : s.basis()) {
      if (qt.phi() * v != pair(v, h.unit()) * h.unit()) return false;
    }
    return true;
  };
  auto divides = [](std::size_t d, std::size_t m) { return d != 0 && m % d == 0; };

  const std::size_t index = n % a.dim() == 0 ? n / a.dim() : 0;
  rep.checks.checks.push_back(check("index divides", divides(index, rep.b.dim()), "[H*:A] does not divide dim B"));
  rep.checks.checks.push_back(
      check("trivial on intersection", trivial_on(a.intersect(rep.b)), "Phi_R is not trivial on A and B"));
  rep.checks.checks.push_back(
      check("whole iff trivial", (rep.b.dim() == n) == trivial_on(a), "B = H* disagrees with Phi_R|A = eps"));
  rep.checks.checks.push_back(check("inside H_R", qt.h_r().space().contains(cq.k.space()), "K_A is not inside H_R"));
  const std::size_t hr_index = n % qt.h_r().dim() == 0 ? n / qt.h_r().dim() : 0;
  rep.checks.checks.push_back(check("rs-min divides", divides(hr_index, dim_bar), "[H:H_R] does not divide dim H_A"));
  rep.checks.checks.push_back(check("rs-min sequence", factor_through(cq.presentation, full.presentation).has_value(),
                                    "H -> H_A -> H_bar does not exist"));
  rep.checks.checks.push_back(check("minimality transfer", !full.quotient_qt.minimal() || qt.minimal(),
                                    "H_bar minimal but H not minimal"));
  if (qt.factorizable()) {
    rep.checks.checks.push_back(
        check("complement dimension", a.dim() * rep.b.dim() == n, "dim A dim B != dim H"));
    rep.checks.checks.push_back(check("complement intersection", a.intersect(rep.b) == Subspace::span(n, {h.counit()}),
                                      "A and B meet outside k1"));
  }
  return rep;
}

}  // namespace hopfkit
