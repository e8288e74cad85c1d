#include "hopfkit/transmutation.hpp"

#include "hopfkit/hopf_ops.hpp"

#include <map>

namespace hopfkit {

namespace {

using SparseVec = std::map<std::size_t, CycloScalar>;

void add_sparse(SparseVec& v, std::size_t k, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto& slot = v[k];
  slot += c;
  if (slot.is_zero()) v.erase(k);
}

// x e_b for sparse x
SparseVec right_multiply(const FiniteDimHopf& h, const SparseVec& x, std::size_t b) {
  SparseVec out;
  for (const auto& [t, c] : x) {
    for (const auto& m : h.mult_terms(t, b)) add_sparse(out, m.index, c * m.coeff);
  }
  return out;
}

SparseVec antipode_column(const FiniteDimHopf& h, std::size_t a) {
  SparseVec out;
  for (std::size_t t = 0; t < h.dim(); ++t) add_sparse(out, t, h.antipode_matrix()(t, a));
  return out;
}

// S(e_a) e_z e_b
SparseVec sandwich(const FiniteDimHopf& h, const std::vector<SparseVec>& s_cols, std::size_t a, std::size_t z, std::size_t b) {
  return right_multiply(h, right_multiply(h, s_cols[a], z), b);
}

AxiomCheck make_check(std::string name) { return AxiomCheck{std::move(name), true, {}, {}}; }

void mark_failed(AxiomCheck& c, std::vector<std::size_t> witness, std::string detail) {
  c.holds = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

}  // namespace

BraidedStructures::BraidedStructures(QTPair qt) : qt_(std::move(qt)), n_(qt_.algebra().dim()) {
  const FiniteDimHopf& h = qt_.algebra();
  const std::size_t n = n_;
  std::vector<SparseVec> s_cols(n);
  for (std::size_t a = 0; a < n; ++a) s_cols[a] = antipode_column(h, a);
  const auto r_entries = qt_.r().entries();

  std::vector<ExactMatrix> ad(n);
  for (const auto& e : r_entries) {
    if (ad[e.left].rows() == 0) ad[e.left] = adjoint_matrix(h, e.left);
  }

  // braided coproduct: sum over Delta(e_m) = e_p (x) e_q and R = e_i (x) e_j
  comult_.assign(n, TensorElement(n, n));
  for (std::size_t m = 0; m < n; ++m) {
    for (const auto& d : h.comult_terms(m)) {
      for (const auto& e : r_entries) {
        SparseVec ps;
        for (const auto& [t, c] : s_cols[e.right]) {
          for (const auto& mt : h.mult_terms(d.left, t)) add_sparse(ps, mt.index, c * mt.coeff);
        }
        if (ps.empty()) continue;
        const Vec adq = ad[e.left].column(d.right);
        const CycloScalar coeff = d.coeff * e.coeff;
        for (const auto& [u, cu] : ps) {
          for (std::size_t v = 0; v < n; ++v) {
            if (!adq[v].is_zero()) comult_[m](u, v) += coeff * cu * adq[v];
          }
        }
      }
    }
  }

  // braided product: (e^k x e^l)(e_w) = sum c c'' [e_k](S(e_a) w1 e_b) [e_l](S(e_j) w2)
  // over R = e_i (x) e_j, Delta(e_i) = e_a (x) e_b, Delta(e_w) = w1 (x) w2
  mult_.assign(n * n, zero_vec(n));
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto& dw : h.comult_terms(w)) {
      for (const auto& e : r_entries) {
        const SparseVec y = right_multiply(h, s_cols[e.right], dw.right);
        if (y.empty()) continue;
        for (const auto& di : h.comult_terms(e.left)) {
          const SparseVec x = sandwich(h, s_cols, di.left, dw.left, di.right);
          const CycloScalar coeff = e.coeff * di.coeff * dw.coeff;
          for (const auto& [k, ck] : x) {
            for (const auto& [l, cl] : y) mult_[k * n + l][w] += coeff * ck * cl;
          }
        }
      }
    }
  }

  // coadjoint coaction: rho(e^k)(e_b (x) e_w) = sum [e_k](S(w1) e_b w2)
  coaction_.assign(n, TensorElement(n, n));
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto& dw : h.comult_terms(w)) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& [k, ck] : sandwich(h, s_cols, dw.left, b, dw.right)) coaction_[k](b, w) += dw.coeff * ck;
      }
    }
  }
}

TensorElement BraidedStructures::braided_comultiply(const Vec& a) const {
  TensorElement scaled(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& e : comult_[i].entries()) scaled(e.left, e.right) += a[i] * e.coeff;
  }
  return scaled;
}

Vec BraidedStructures::braided_multiply(const Vec& p, const Vec& q) const {
  Vec out = zero_vec(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (p[k].is_zero()) continue;
    for (std::size_t l = 0; l < n_; ++l) {
      if (!q[l].is_zero()) axpy(out, p[k] * q[l], mult_[k * n_ + l]);
    }
  }
  return out;
}

TensorElement BraidedStructures::coadjoint_coaction(const Vec& p) const {
  TensorElement out(n_, n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (p[k].is_zero()) continue;
    for (const auto& e : coaction_[k].entries()) out(e.left, e.right) += p[k] * e.coeff;
  }
  return out;
}

ExactMatrix BraidedStructures::coadjoint_action_matrix(std::size_t i) const {
  const FiniteDimHopf& h = qt_.algebra();
  std::vector<SparseVec> s_cols(n_);
  for (std::size_t a = 0; a < n_; ++a) s_cols[a] = antipode_column(h, a);
  // (e_i . e^k)(e_x) = sum over Delta(e_i) of [e_k](S(e_s) e_x e_t)
  ExactMatrix m(n_, n_);
  for (const auto& d : h.comult_terms(i)) {
    for (std::size_t x = 0; x < n_; ++x) {
      for (const auto& [k, ck] : sandwich(h, s_cols, d.left, x, d.right)) m(x, k) += d.coeff * ck;
    }
  }
  return m;
}

AxiomReport BraidedStructures::verify_braided_laws() const {
  const FiniteDimHopf& h = qt_.algebra();
  const std::size_t n = n_;
  AxiomReport rep;

  AxiomCheck unit = make_check("braided unit");
  for (std::size_t k = 0; k < n && unit.holds; ++k) {
    const Vec ek = unit_vec(n, k);
    if (braided_multiply(h.counit(), ek) != ek || braided_multiply(ek, h.counit()) != ek) {
      mark_failed(unit, {k}, "the unit of H* is not a unit for the braided product");
    }
  }
  rep.checks.push_back(unit);

  AxiomCheck assoc = make_check("braided associativity");
  for (std::size_t a = 0; a < n && assoc.holds; ++a) {
    for (std::size_t b = 0; b < n && assoc.holds; ++b) {
      const Vec& ab = mult_[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const Vec ec = unit_vec(n, c);
        if (braided_multiply(ab, ec) != braided_multiply(unit_vec(n, a), mult_[b * n + c])) {
          mark_failed(assoc, {a, b, c}, "braided product is not associative");
          break;
        }
      }
    }
  }
  rep.checks.push_back(assoc);

  AxiomCheck counit = make_check("braided counit");
  if (comult_.empty() || braided_comultiply(h.unit()) != h.one_tensor()) {
    mark_failed(counit, {}, "braided coproduct of 1 is not 1 (x) 1");
  }
  for (std::size_t m = 0; m < n && counit.holds; ++m) {
    const TensorElement& d = comult_[m];
    if (d.contract_left(h.counit()) != unit_vec(n, m) || d.contract_right(h.counit()) != unit_vec(n, m)) {
      mark_failed(counit, {m}, "counit law fails for the braided coproduct");
    }
  }
  rep.checks.push_back(counit);

  AxiomCheck coassoc = make_check("braided coassociativity");
  for (std::size_t m = 0; m < n && coassoc.holds; ++m) {
    std::vector<std::vector<CycloScalar>> lhs(n, std::vector<CycloScalar>(n * n));
    std::vector<std::vector<CycloScalar>> rhs(n, std::vector<CycloScalar>(n * n));
    for (const auto& e : comult_[m].entries()) {
      for (const auto& f : comult_[e.left].entries()) lhs[f.left][f.right * n + e.right] += e.coeff * f.coeff;
      for (const auto& f : comult_[e.right].entries()) rhs[e.left][f.left * n + f.right] += e.coeff * f.coeff;
    }
    if (lhs != rhs) mark_failed(coassoc, {m}, "braided coproduct is not coassociative");
  }
  rep.checks.push_back(coassoc);
  return rep;
}

AxiomReport verify_braided_morphism(const BraidedStructures& bs) {
  const QTPair& qt = bs.qt();
  const FiniteDimHopf& h = qt.algebra();
  const std::size_t n = h.dim();
  const ExactMatrix& phi = qt.phi();
  AxiomReport rep;

  AxiomCheck lin = make_check("H-linearity");
  for (std::size_t i = 0; i < n; ++i) {
    if (phi * bs.coadjoint_action_matrix(i) != adjoint_matrix(h, i) * phi) {
      mark_failed(lin, {i}, "Phi_R(h . p) != ad_h(Phi_R(p)) for h = e_" + std::to_string(i));
      break;
    }
  }
  rep.checks.push_back(lin);

  AxiomCheck prod = make_check("product");
  std::vector<Vec> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = phi.column(k);
  for (std::size_t k = 0; k < n && prod.holds; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (phi * bs.braided_multiply_basis(k, l) != h.multiply(cols[k], cols[l])) {
        mark_failed(prod, {k, l}, "Phi_R(p x q) != Phi_R(p) Phi_R(q)");
        break;
      }
    }
  }
  rep.checks.push_back(prod);

  AxiomCheck coprod = make_check("coproduct");
  for (std::size_t k = 0; k < n; ++k) {
    // Delta_{H*}(e^k) = sum m_{ab}^k e^a (x) e^b
    TensorElement dk(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& t : h.mult_terms(a, b)) {
          if (t.index == k) dk(a, b) += t.coeff;
        }
      }
    }
    if (bs.braided_comultiply(cols[k]) != dk.apply(phi, phi)) {
      mark_failed(coprod, {k}, "braided Delta(Phi_R(p)) != (Phi_R (x) Phi_R) Delta(p)");
      break;
    }
  }
  rep.checks.push_back(coprod);

  AxiomCheck lr = make_check("left-right");
  const ExactMatrix& s = h.antipode_matrix();
  if (qt.phi_left() != s * phi * s.transpose()) mark_failed(lr, {}, "f_{Q21} != S Phi_R S*");
  rep.checks.push_back(lr);
  return rep;
}

AxiomReport verify_rel_deltas(const BraidedStructures& bs) {
  const QTPair& qt = bs.qt();
  const FiniteDimHopf& h = qt.algebra();
  const std::size_t n = h.dim();
  const auto r_entries = qt.r().entries();
  AxiomReport rep;

  std::vector<ExactMatrix> ad(n);
  for (const auto& e : r_entries) {
    if (ad[e.left].rows() == 0) ad[e.left] = adjoint_matrix(h, e.left);
  }
  AxiomCheck rel = make_check("rel-deltas");
  for (std::size_t m = 0; m < n && rel.holds; ++m) {
    TensorElement rebuilt(n, n);
    for (const auto& d : bs.braided_comultiply_basis(m).entries()) {
      for (const auto& e : r_entries) {
        const Vec left = h.multiply_basis(d.left, e.right);
        if (is_zero_vec(left)) continue;
        const Vec right = ad[e.left].column(d.right);
        rebuilt = rebuilt + TensorElement::outer((d.coeff * e.coeff) * left, right);
      }
    }
    if (rebuilt != h.comultiply_basis(m)) mark_failed(rel, {m}, "Delta(a) != a_1 R2 (x) ad_{R1}(a_2)");
  }
  rep.checks.push_back(rel);

  AxiomCheck ident = make_check("r-identity");
  TensorElement sum(n, n);
  const ExactMatrix& s = h.antipode_matrix();
  for (const auto& r : r_entries) {
    for (const auto& big : r_entries) {
      const Vec left = h.multiply_basis(r.left, big.left);
      if (is_zero_vec(left)) continue;
      const Vec right = h.multiply(s.column(big.right), h.basis_vector(r.right));
      sum = sum + TensorElement::outer((r.coeff * big.coeff) * left, right);
    }
  }
  if (sum != h.one_tensor()) mark_failed(ident, {}, "r1 R1 (x) S(R2) r2 != 1 (x) 1");
  rep.checks.push_back(ident);
  return rep;
}

}  // namespace hopfkit
