#include "hopfkit/qt.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

using Cube = std::vector<CycloScalar>;

std::size_t cube_index(std::size_t n, std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; }

// Coordinates (a, b, c) of the first entry where the cubes differ.
std::optional<std::vector<std::size_t>> cube_mismatch(std::size_t n, const Cube& x, const Cube& y) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] != y[t]) return std::vector<std::size_t>{t / (n * n), (t / n) % n, t % n};
  }
  return std::nullopt;
}

AxiomCheck make_check(std::string name) { return AxiomCheck{std::move(name), true, {}, {}}; }

void mark_failed(AxiomCheck& c, std::vector<std::size_t> witness, std::string detail) {
  c.holds = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

std::string indices(const std::vector<std::size_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

// (Delta (x) id)(R) against R13 R23.
AxiomCheck check_qt1(const FiniteDimHopf& h, const std::vector<TensorElement::Entry>& re) {
  const std::size_t n = h.dim();
  Cube lhs(n * n * n), rhs(n * n * n);
  for (const auto& e : re) {
    for (const auto& t : h.comult_terms(e.left)) lhs[cube_index(n, t.left, t.right, e.right)] += e.coeff * t.coeff;
  }
  for (const auto& x : re) {
    for (const auto& y : re) {
      for (const auto& t : h.mult_terms(x.right, y.right)) {
        rhs[cube_index(n, x.left, y.left, t.index)] += x.coeff * y.coeff * t.coeff;
      }
    }
  }
  AxiomCheck c = make_check("QT1");
  if (auto w = cube_mismatch(n, lhs, rhs)) {
    mark_failed(c, *w, "(Delta (x) id)(R) != R13 R23 at coefficient (" + indices(*w) + ")");
  }
  return c;
}

// (id (x) Delta)(R) against R13 R12.
AxiomCheck check_qt3(const FiniteDimHopf& h, const std::vector<TensorElement::Entry>& re) {
  const std::size_t n = h.dim();
  Cube lhs(n * n * n), rhs(n * n * n);
  for (const auto& e : re) {
    for (const auto& t : h.comult_terms(e.right)) lhs[cube_index(n, e.left, t.left, t.right)] += e.coeff * t.coeff;
  }
  for (const auto& x : re) {
    for (const auto& y : re) {
      for (const auto& t : h.mult_terms(x.left, y.left)) {
        rhs[cube_index(n, t.index, y.right, x.right)] += x.coeff * y.coeff * t.coeff;
      }
    }
  }
  AxiomCheck c = make_check("QT3");
  if (auto w = cube_mismatch(n, lhs, rhs)) {
    mark_failed(c, *w, "(id (x) Delta)(R) != R13 R12 at coefficient (" + indices(*w) + ")");
  }
  return c;
}

AxiomCheck check_counit_leg(const FiniteDimHopf& h, const TensorElement& r, bool left_leg) {
  const std::size_t n = h.dim();
  Vec v = zero_vec(n);
  for (const auto& e : r.entries()) {
    if (left_leg) {
      v[e.right] += h.counit()[e.left] * e.coeff;
    } else {
      v[e.left] += h.counit()[e.right] * e.coeff;
    }
  }
  AxiomCheck c = make_check(left_leg ? "QT2" : "QT4");
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != h.unit()[i]) {
      mark_failed(c, {i}, left_leg ? "(eps (x) id)(R) != 1 at coordinate " + std::to_string(i)
                                   : "(id (x) eps)(R) != 1 at coordinate " + std::to_string(i));
      break;
    }
  }
  return c;
}

AxiomCheck check_qt5(const FiniteDimHopf& h, const TensorElement& r) {
  AxiomCheck c = make_check("QT5");
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const TensorElement d = h.comultiply_basis(i);
    if (h.tensor_multiply(r, d) != h.tensor_multiply(d.flip(), r)) {
      mark_failed(c, {i}, "R Delta(h) != Delta^cop(h) R for h = e_" + std::to_string(i));
      break;
    }
  }
  return c;
}

constexpr std::size_t kSolveLimit = 12;

// Inverse of R in H (x) H by solving R X = 1 (x) 1; nullopt when singular.
std::optional<TensorElement> solve_inverse(const FiniteDimHopf& h, const TensorElement& r) {
  const std::size_t n = h.dim();
  ExactMatrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      TensorElement basis(n, n);
      basis(a, b) = 1;
      for (const auto& e : h.tensor_multiply(r, basis).entries()) m(e.left * n + e.right, a * n + b) = e.coeff;
    }
  }
  if (rank(m) != n * n) return std::nullopt;
  Vec rhs(n * n);
  for (const auto& e : h.one_tensor().entries()) rhs[e.left * n + e.right] = e.coeff;
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  TensorElement out(n, n);
  for (std::size_t t = 0; t < n * n; ++t) out(t / n, t % n) = (*x)[t];
  return out;
}

void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal error: ") + what);
}

}  // namespace

DrinfeldElement drinfeld_element(const FiniteDimHopf& h, const TensorElement& r) {
  const std::size_t n = h.dim();
  DrinfeldElement d;
  d.u = zero_vec(n);
  for (const auto& e : r.entries()) {
    axpy(d.u, e.coeff, h.multiply(h.antipode(h.basis_vector(e.right)), h.basis_vector(e.left)));
  }
  const ExactMatrix lu = h.left_mult_matrix(d.u);
  d.invertible = rank(lu) == n;
  d.group_like = h.comultiply(d.u) == TensorElement::outer(d.u, d.u);
  d.central = lu == h.right_mult_matrix(d.u);
  const ExactMatrix s2 = h.antipode_matrix() * h.antipode_matrix();
  d.implements_s_squared = true;
  for (std::size_t i = 0; i < n && d.implements_s_squared; ++i) {
    d.implements_s_squared = h.multiply(s2.column(i), d.u) == lu.column(i);
  }
  return d;
}

QtVerification verify_qt(const HopfPtr& hp, const TensorElement& r) {
  if (!hp) throw StructureError("verify_qt needs an algebra");
  const FiniteDimHopf& h = *hp;
  const std::size_t n = h.dim();
  QtVerification out;
  auto& checks = out.report.checks;

  AxiomCheck shape = make_check("shape");
  if (r.left_dim() != n || r.right_dim() != n) {
    mark_failed(shape, {r.left_dim(), r.right_dim()}, "R must live in H (x) H with dim H = " + std::to_string(n));
    checks.push_back(shape);
    return out;
  }
  checks.push_back(shape);

  const TensorElement s_r = r.apply_left(h.antipode_matrix());
  const TensorElement one = h.one_tensor();
  const bool s_r_inverts = h.tensor_multiply(s_r, r) == one && h.tensor_multiply(r, s_r) == one;

  AxiomCheck inv = make_check("invertible");
  std::optional<TensorElement> r_inv;
  if (n <= kSolveLimit) {
    r_inv = solve_inverse(h, r);
    if (!r_inv) mark_failed(inv, {}, "R is not invertible in H (x) H");
  } else if (s_r_inverts) {
    r_inv = s_r;
  } else {
    mark_failed(inv, {}, "(S (x) id)(R) is not an inverse of R");
  }
  checks.push_back(inv);

  const auto re = r.entries();
  checks.push_back(check_qt1(h, re));
  checks.push_back(check_counit_leg(h, r, true));
  checks.push_back(check_qt3(h, re));
  checks.push_back(check_counit_leg(h, r, false));
  checks.push_back(check_qt5(h, r));

  AxiomCheck rel = make_check("antipode relations");
  if (r_inv) {
    if (!s_r_inverts || s_r != *r_inv) {
      mark_failed(rel, {}, "(S (x) id)(R) != R^-1");
    } else if (!h.antipode_inverse_matrix() || r.apply_right(*h.antipode_inverse_matrix()) != *r_inv) {
      mark_failed(rel, {}, "(id (x) S^-1)(R) != R^-1");
    } else if (r.apply(h.antipode_matrix(), h.antipode_matrix()) != r) {
      mark_failed(rel, {}, "(S (x) S)(R) != R");
    }
  } else {
    mark_failed(rel, {}, "skipped: R has no inverse");
  }
  checks.push_back(rel);

  if (out.report.ok()) out.pair.emplace(QTPair::Key{}, hp, r, *r_inv);
  return out;
}

QTPair QTPair::make(HopfPtr h, TensorElement r) {
  QtVerification v = verify_qt(h, r);
  if (!v.ok()) {
    const AxiomCheck* f = v.report.first_failure();
    throw QtError("R-matrix rejected: " + f->name + ": " + f->detail);
  }
  return std::move(*v.pair);
}

QTPair::QTPair(Key, HopfPtr h, TensorElement r, TensorElement r_inv)
    : h_(std::move(h)), r_(std::move(r)), r_inv_(std::move(r_inv)) {
  const FiniteDimHopf& a = *h_;
  const std::size_t n = a.dim();
  r21_ = r_.flip();
  q_ = a.tensor_multiply(r21_, r_);
  drinfeld_ = drinfeld_element(a, r_);

  const HopfPtr hd = dual(a);
  f_r_.emplace(cop(*hd), h_, r_.coefficients().transpose());
  f_r21_.emplace(hd, op(a), r_.coefficients());
  ensure(f_r_->is_hopf_map(), "f_R is not a Hopf map");
  ensure(f_r21_->is_hopf_map(), "f_R21 is not a Hopf map");

  phi_ = q_.coefficients().transpose();
  phi_left_ = q_.coefficients();
  const ExactMatrix& s = a.antipode_matrix();
  ensure(phi_left_ == s * phi_ * s.transpose(), "left and right Phi are not conjugate under S");

  h_plus_.emplace(h_, r_.right_legs());
  h_minus_.emplace(h_, r_.left_legs());
  ensure(h_plus_->is_hopf_subalgebra() && h_minus_->is_hopf_subalgebra(), "H+ or H- is not a Hopf subalgebra");
  ensure(h_plus_->dim() == h_minus_->dim(), "dim H+ != dim H-");

  std::vector<Vec> gens = h_plus_->basis();
  gens.insert(gens.end(), h_minus_->basis().begin(), h_minus_->basis().end());
  h_r_.emplace(subalgebra_closure(h_, gens));
  ensure(product_span(a, h_minus_->space(), h_plus_->space()) == h_r_->space(), "H- H+ != H_R");
  ensure(product_span(a, h_plus_->space(), h_minus_->space()) == h_r_->space(), "H+ H- != H_R");

  phi_image_ = Subspace::span(n, [&] {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(phi_.column(j));
    return cols;
  }());

  triangular_ = q_ == a.one_tensor();
  factorizable_ = phi_image_.dim() == n;
  minimal_ = h_r_->dim() == n;
  ensure(!factorizable_ || minimal_, "factorizable but not minimal");
}

QTPair push_r(const QTPair& qt, const HopfMorphism& pi) {
  if (pi.source().get() != qt.hopf().get() && !(*pi.source() == qt.algebra())) {
    throw StructureError("push_r: the map does not start at the quasitriangular algebra");
  }
  if (!pi.is_hopf_map() || !pi.is_surjective()) throw StructureError("push_r needs a surjective Hopf map");
  const ExactMatrix& p = pi.matrix();
  QTPair pushed = QTPair::make(pi.target(), qt.r().apply(p, p));
  ensure(pushed.f_r().matrix() == p * qt.f_r().matrix() * p.transpose(), "f_{R_q} != q f_R q*");
  return pushed;
}

}  // namespace hopfkit
