#include "hopfkit/subspace.hpp"

#include "hopfkit/hopf_ops.hpp"

namespace hopfkit {

SubspaceHandle::SubspaceHandle(HopfPtr ambient, Subspace space)
    : ambient_(std::move(ambient)), space_(std::move(space)) {
  if (!ambient_) throw StructureError("subspace handle needs an ambient algebra");
  if (space_.ambient_dim() != ambient_->dim()) throw StructureError("subspace lives in a different dimension");
  evaluate();
}

SubspaceHandle::SubspaceHandle(HopfPtr ambient, const std::vector<Vec>& spanning)
    : SubspaceHandle(ambient, Subspace::span(ambient ? ambient->dim() : 0, spanning)) {}

void SubspaceHandle::evaluate() {
  const FiniteDimHopf& h = *ambient_;
  const auto& b = space_.basis();

  subalgebra_ = space_.contains(h.unit());
  commutative_ = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Vec p = h.multiply(b[i], b[j]);
      if (subalgebra_ && !space_.contains(p)) subalgebra_ = false;
      if (commutative_ && j > i && p != h.multiply(b[j], b[i])) commutative_ = false;
    }
  }

  left_coideal_ = true;
  right_coideal_ = true;
  for (const auto& v : b) {
    TensorElement d = h.comultiply(v);
    if (left_coideal_ && !space_.contains(d.right_legs())) left_coideal_ = false;
    if (right_coideal_ && !space_.contains(d.left_legs())) right_coideal_ = false;
  }

  s_stable_ = true;
  for (const auto& v : b) {
    if (!space_.contains(h.antipode(v))) {
      s_stable_ = false;
      break;
    }
  }

  ad_stable_ = true;
  for (std::size_t i = 0; i < h.dim() && ad_stable_; ++i) {
    Vec e = h.basis_vector(i);
    for (const auto& v : b) {
      if (!space_.contains(adjoint_action(h, e, v))) {
        ad_stable_ = false;
        break;
      }
    }
  }
}

std::string SubspaceHandle::first_failed_normal_predicate() const {
  if (!subalgebra_) return "subalgebra";
  if (!left_coideal_) return "left coideal";
  if (!ad_stable_) return "ad-stable";
  return {};
}

SubspaceHandle subalgebra_closure(const HopfPtr& hp, const std::vector<Vec>& generators, ClosureMode mode) {
  const FiniteDimHopf& h = *hp;
  Subspace s(h.dim());
  s.insert(h.unit());
  for (const auto& g : generators) s.insert(g);
  for (std::size_t round = 0; round <= h.dim(); ++round) {
    const std::vector<Vec> basis = s.basis();
    bool grew = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) grew |= s.insert(h.multiply(basis[i], basis[j]));
    }
    if (mode == ClosureMode::HopfSubalgebra) {
      for (const auto& v : basis) {
        grew |= s.insert(h.antipode(v));
        const TensorElement d = h.comultiply(v);
        const Subspace left = d.left_legs();
        const Subspace right = d.right_legs();
        for (const auto& w : left.basis()) grew |= s.insert(w);
        for (const auto& w : right.basis()) grew |= s.insert(w);
      }
    }
    if (!grew) return SubspaceHandle(hp, s);
  }
  throw StructureError("internal error: closure did not stabilise within dim H rounds");
}

Subspace centralizer(const FiniteDimHopf& h, const Subspace& v) {
  const std::size_t n = h.dim();
  std::vector<Vec> rows;
  for (const auto& x : v.basis()) {
    ExactMatrix c = h.right_mult_matrix(x) - h.left_mult_matrix(x);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(c.row(r));
  }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, kernel_basis(ExactMatrix::from_rows(n, rows)));
}

Subspace center(const FiniteDimHopf& h) { return centralizer(h, Subspace::whole(h.dim())); }

Subspace product_span(const FiniteDimHopf& h, const Subspace& u, const Subspace& w) {
  Subspace s(h.dim());
  for (const auto& x : u.basis()) {
    for (const auto& y : w.basis()) s.insert(h.multiply(x, y));
  }
  return s;
}

}  // namespace hopfkit
