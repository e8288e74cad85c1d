#include "hopfkit/hopf_algebra.hpp"

#include <map>
#include <sstream>

namespace hopfkit {

namespace {

using Sparse = std::map<std::uint64_t, CycloScalar>;

void add_to(Sparse& s, std::uint64_t key, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

// ----------------------------------------------------------- FiniteDimHopf

Vec FiniteDimHopf::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const CycloScalar ab = a[i] * b[j];
      for (const auto& t : mult_terms(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

Vec FiniteDimHopf::multiply_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (const auto& t : mult_terms(i, j)) out[t.index] += t.coeff;
  return out;
}

TensorElement FiniteDimHopf::comultiply(const Vec& a) const {
  TensorElement out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : comult_[i]) out(t.left, t.right) += a[i] * t.coeff;
  }
  return out;
}

TensorElement FiniteDimHopf::comultiply_basis(std::size_t i) const {
  TensorElement out(dim_, dim_);
  for (const auto& t : comult_[i]) out(t.left, t.right) += t.coeff;
  return out;
}

CycloScalar FiniteDimHopf::epsilon(const Vec& a) const {
  CycloScalar s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i].is_zero() && !counit_[i].is_zero()) s += a[i] * counit_[i];
  }
  return s;
}

ExactMatrix FiniteDimHopf::left_mult_matrix(const Vec& a) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& t : mult_terms(i, j)) m(t.index, j) += a[i] * t.coeff;
    }
  }
  return m;
}

ExactMatrix FiniteDimHopf::right_mult_matrix(const Vec& a) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& t : mult_terms(j, i)) m(t.index, j) += a[i] * t.coeff;
    }
  }
  return m;
}

TensorElement FiniteDimHopf::tensor_multiply(const TensorElement& x, const TensorElement& y) const {
  TensorElement out(dim_, dim_);
  const auto xe = x.entries();
  const auto ye = y.entries();
  for (const auto& a : xe) {
    for (const auto& b : ye) {
      const auto& l = mult_terms(a.left, b.left);
      if (l.empty()) continue;
      const auto& r = mult_terms(a.right, b.right);
      if (r.empty()) continue;
      const CycloScalar ab = a.coeff * b.coeff;
      for (const auto& tl : l) {
        const CycloScalar abl = ab * tl.coeff;
        for (const auto& tr : r) out(tl.index, tr.index) += abl * tr.coeff;
      }
    }
  }
  return out;
}

bool FiniteDimHopf::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (multiply_basis(i, j) != multiply_basis(j, i)) return false;
    }
  }
  return true;
}

bool FiniteDimHopf::is_cocommutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    TensorElement d = comultiply_basis(i);
    if (d != d.flip()) return false;
  }
  return true;
}

bool operator==(const FiniteDimHopf& a, const FiniteDimHopf& b) {
  if (a.dim_ != b.dim_ || a.labels_ != b.labels_) return false;
  if (a.unit_ != b.unit_ || a.counit_ != b.counit_ || !(a.antipode_ == b.antipode_)) return false;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.comultiply_basis(i) != b.comultiply_basis(i)) return false;
    for (std::size_t j = 0; j < a.dim_; ++j) {
      if (a.multiply_basis(i, j) != b.multiply_basis(i, j)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- HopfBuilder

HopfBuilder::HopfBuilder(std::size_t dim)
    : dim_(dim),
      mult_(dim * dim, Vec(dim)),
      unit_(dim),
      comult_(dim, TensorElement(dim, dim)),
      counit_(dim),
      antipode_(dim, dim) {
  if (dim == 0) throw StructureError("dimension must be positive");
  for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
}

void HopfBuilder::check_index(std::size_t i) const {
  if (i >= dim_) {
    throw StructureError("basis index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(dim_));
  }
}

HopfBuilder& HopfBuilder::name(std::string n) {
  name_ = std::move(n);
  return *this;
}

HopfBuilder& HopfBuilder::labels(std::vector<std::string> l) {
  if (l.size() != dim_) throw StructureError("label count does not match dimension");
  labels_ = std::move(l);
  return *this;
}

HopfBuilder& HopfBuilder::mult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  mult_[i * dim_ + j][k] += c;
  return *this;
}

HopfBuilder& HopfBuilder::mult(std::size_t i, std::size_t j, const Vec& product) {
  check_index(i);
  check_index(j);
  if (product.size() != dim_) throw StructureError("product vector has wrong length");
  mult_[i * dim_ + j] = product;
  return *this;
}

HopfBuilder& HopfBuilder::unit(const Vec& u) {
  if (u.size() != dim_) throw StructureError("unit vector has wrong length");
  unit_ = u;
  return *this;
}

HopfBuilder& HopfBuilder::comult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  comult_[i](j, k) += c;
  return *this;
}

HopfBuilder& HopfBuilder::comult(std::size_t i, const TensorElement& t) {
  check_index(i);
  if (t.left_dim() != dim_ || t.right_dim() != dim_) throw StructureError("coproduct has wrong shape");
  comult_[i] = t;
  return *this;
}

HopfBuilder& HopfBuilder::counit(const Vec& e) {
  if (e.size() != dim_) throw StructureError("counit vector has wrong length");
  counit_ = e;
  return *this;
}

HopfBuilder& HopfBuilder::antipode(std::size_t j, std::size_t i, const CycloScalar& c) {
  check_index(i);
  check_index(j);
  antipode_(i, j) += c;
  return *this;
}

HopfBuilder& HopfBuilder::antipode(const ExactMatrix& s) {
  if (s.rows() != dim_ || s.cols() != dim_) throw StructureError("antipode matrix has wrong shape");
  antipode_ = s;
  return *this;
}

HopfPtr HopfBuilder::build() const {
  std::shared_ptr<FiniteDimHopf> h(new FiniteDimHopf());
  h->dim_ = dim_;
  h->name_ = name_;
  h->labels_ = labels_;
  h->mult_.resize(dim_ * dim_);
  for (std::size_t p = 0; p < dim_ * dim_; ++p) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!mult_[p][k].is_zero()) {
        h->mult_[p].push_back({static_cast<std::uint32_t>(k), mult_[p][k]});
      }
    }
  }
  h->unit_ = unit_;
  h->comult_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (const auto& e : comult_[i].entries()) {
      h->comult_[i].push_back(
          {static_cast<std::uint32_t>(e.left), static_cast<std::uint32_t>(e.right), e.coeff});
    }
  }
  h->counit_ = counit_;
  h->antipode_ = antipode_;
  try {
    h->antipode_inv_ = inverse(antipode_);
  } catch (const ArithmeticError&) {
    h->antipode_inv_.reset();
  }
  return h;
}

// ------------------------------------------------------------ verification

bool AxiomReport::ok() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.holds) return &c;
  }
  return nullptr;
}

namespace {

void fail(AxiomCheck& c, std::vector<std::size_t> witness, const std::string& detail) {
  c.holds = false;
  c.witness = std::move(witness);
  c.detail = detail + " at basis indices (" + join(c.witness) + ")";
}

AxiomCheck check_associativity(const FiniteDimHopf& h) {
  AxiomCheck c{"associativity", true, {}, {}};
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ab = h.mult_terms(a, b);
      for (std::size_t d = 0; d < n; ++d) {
        Vec lhs(n), rhs(n);
        for (const auto& t : ab) {
          for (const auto& u : h.mult_terms(t.index, d)) lhs[u.index] += t.coeff * u.coeff;
        }
        for (const auto& t : h.mult_terms(b, d)) {
          for (const auto& u : h.mult_terms(a, t.index)) rhs[u.index] += t.coeff * u.coeff;
        }
        if (lhs != rhs) {
          fail(c, {a, b, d}, "(e_a e_b) e_c != e_a (e_b e_c)");
          return c;
        }
      }
    }
  }
  return c;
}

AxiomCheck check_unit(const FiniteDimHopf& h) {
  AxiomCheck c{"unit", true, {}, {}};
  for (std::size_t a = 0; a < h.dim(); ++a) {
    Vec e = h.basis_vector(a);
    if (h.multiply(h.unit(), e) != e || h.multiply(e, h.unit()) != e) {
      fail(c, {a}, "1 e_a != e_a or e_a 1 != e_a");
      return c;
    }
  }
  return c;
}

AxiomCheck check_coassociativity(const FiniteDimHopf& h) {
  AxiomCheck c{"coassociativity", true, {}, {}};
  const std::uint64_t n = h.dim();
  for (std::size_t a = 0; a < h.dim(); ++a) {
    Sparse lhs, rhs;
    for (const auto& t : h.comult_terms(a)) {
      for (const auto& u : h.comult_terms(t.left)) {
        add_to(lhs, (u.left * n + u.right) * n + t.right, t.coeff * u.coeff);
      }
      for (const auto& u : h.comult_terms(t.right)) {
        add_to(rhs, (t.left * n + u.left) * n + u.right, t.coeff * u.coeff);
      }
    }
    if (lhs != rhs) {
      fail(c, {a}, "(Delta (x) id) Delta(e_a) != (id (x) Delta) Delta(e_a)");
      return c;
    }
  }
  return c;
}

AxiomCheck check_counit(const FiniteDimHopf& h) {
  AxiomCheck c{"counit", true, {}, {}};
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Vec l(n), r(n);
    for (const auto& t : h.comult_terms(a)) {
      const CycloScalar& el = h.counit()[t.left];
      if (!el.is_zero()) l[t.right] += el * t.coeff;
      const CycloScalar& er = h.counit()[t.right];
      if (!er.is_zero()) r[t.left] += er * t.coeff;
    }
    Vec e = h.basis_vector(a);
    if (l != e || r != e) {
      fail(c, {a}, "(eps (x) id) Delta(e_a) != e_a or (id (x) eps) Delta(e_a) != e_a");
      return c;
    }
  }
  return c;
}

AxiomCheck check_comult_multiplicative(const FiniteDimHopf& h) {
  AxiomCheck c{"comultiplication is an algebra map", true, {}, {}};
  const std::uint64_t n = h.dim();
  {
    TensorElement d1 = h.comultiply(h.unit());
    if (d1 != h.one_tensor()) {
      c.holds = false;
      c.detail = "Delta(1) != 1 (x) 1";
      return c;
    }
  }
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      Sparse lhs, rhs;
      for (const auto& t : h.mult_terms(a, b)) {
        for (const auto& u : h.comult_terms(t.index)) {
          add_to(lhs, u.left * n + u.right, t.coeff * u.coeff);
        }
      }
      for (const auto& x : h.comult_terms(a)) {
        for (const auto& y : h.comult_terms(b)) {
          const auto& l = h.mult_terms(x.left, y.left);
          if (l.empty()) continue;
          const auto& r = h.mult_terms(x.right, y.right);
          const CycloScalar xy = x.coeff * y.coeff;
          for (const auto& tl : l) {
            for (const auto& tr : r) add_to(rhs, tl.index * n + tr.index, xy * tl.coeff * tr.coeff);
          }
        }
      }
      if (lhs != rhs) {
        fail(c, {a, b}, "Delta(e_a e_b) != Delta(e_a) Delta(e_b)");
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_counit_multiplicative(const FiniteDimHopf& h) {
  AxiomCheck c{"counit is an algebra map", true, {}, {}};
  if (!(h.epsilon(h.unit()) == CycloScalar(1))) {
    c.holds = false;
    c.detail = "eps(1) != 1";
    return c;
  }
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      if (h.epsilon(h.multiply_basis(a, b)) != h.counit()[a] * h.counit()[b]) {
        fail(c, {a, b}, "eps(e_a e_b) != eps(e_a) eps(e_b)");
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_antipode(const FiniteDimHopf& h) {
  AxiomCheck c{"antipode", true, {}, {}};
  const std::size_t n = h.dim();
  const ExactMatrix& s = h.antipode_matrix();
  for (std::size_t a = 0; a < n; ++a) {
    Vec l(n), r(n);
    for (const auto& t : h.comult_terms(a)) {
      for (std::size_t k = 0; k < n; ++k) {
        const CycloScalar& sl = s(k, t.left);
        if (!sl.is_zero()) {
          for (const auto& u : h.mult_terms(k, t.right)) l[u.index] += t.coeff * sl * u.coeff;
        }
        const CycloScalar& sr = s(k, t.right);
        if (!sr.is_zero()) {
          for (const auto& u : h.mult_terms(t.left, k)) r[u.index] += t.coeff * sr * u.coeff;
        }
      }
    }
    Vec expected = h.counit()[a] * h.unit();
    if (l != expected || r != expected) {
      fail(c, {a}, "S(e_(1)) e_(2) or e_(1) S(e_(2)) differs from eps(e_a) 1");
      return c;
    }
  }
  return c;
}

}  // namespace

AxiomReport verify_hopf_axioms(const FiniteDimHopf& h) {
  AxiomReport r;
  r.checks.push_back(check_associativity(h));
  r.checks.push_back(check_unit(h));
  r.checks.push_back(check_coassociativity(h));
  r.checks.push_back(check_counit(h));
  r.checks.push_back(check_comult_multiplicative(h));
  r.checks.push_back(check_counit_multiplicative(h));
  r.checks.push_back(check_antipode(h));
  return r;
}

// ---------------------------------------------------------- derived algebras

namespace {

std::vector<std::string> suffixed(const std::vector<std::string>& labels, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + suffix);
  return out;
}

const ExactMatrix& require_inverse_antipode(const FiniteDimHopf& h) {
  if (!h.antipode_inverse_matrix()) throw StructureError("antipode is not invertible");
  return *h.antipode_inverse_matrix();
}

}  // namespace

HopfPtr dual(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  HopfBuilder b(n);
  b.name(h.name().empty() ? "" : h.name() + "*").labels(suffixed(h.labels(), "*"));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& t : h.comult_terms(k)) b.mult(t.left, t.right, k, t.coeff);
  }
  b.unit(h.counit());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : h.mult_terms(i, j)) b.comult(t.index, i, j, t.coeff);
    }
  }
  b.counit(h.unit());
  b.antipode(h.antipode_matrix().transpose());
  return b.build();
}

HopfPtr op(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  HopfBuilder b(n);
  b.name(h.name().empty() ? "" : h.name() + "^op").labels(h.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult(i, j, h.multiply_basis(j, i));
    b.comult(i, h.comultiply_basis(i));
  }
  b.unit(h.unit()).counit(h.counit()).antipode(require_inverse_antipode(h));
  return b.build();
}

HopfPtr cop(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  HopfBuilder b(n);
  b.name(h.name().empty() ? "" : h.name() + "^cop").labels(h.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult(i, j, h.multiply_basis(i, j));
    b.comult(i, h.comultiply_basis(i).flip());
  }
  b.unit(h.unit()).counit(h.counit()).antipode(require_inverse_antipode(h));
  return b.build();
}

HopfPtr op_cop(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  HopfBuilder b(n);
  b.name(h.name().empty() ? "" : h.name() + "^op,cop").labels(h.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult(i, j, h.multiply_basis(j, i));
    b.comult(i, h.comultiply_basis(i).flip());
  }
  b.unit(h.unit()).counit(h.counit()).antipode(h.antipode_matrix());
  return b.build();
}

SubHopf restrict_to(const FiniteDimHopf& h, const Subspace& v) {
  const std::size_t m = v.dim();
  if (m == 0) throw StructureError("restrict_to: empty subspace");
  const auto& basis = v.basis();
  const auto& piv = v.pivots();
  auto coords = [&](const Vec& x) {
    if (!v.contains(x)) throw StructureError("restrict_to: subspace is not closed");
    Vec c(m);
    for (std::size_t r = 0; r < m; ++r) c[r] = x[piv[r]];
    return c;
  };
  HopfBuilder b(m);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m; ++r) labels.push_back("b" + std::to_string(r));
  b.labels(labels);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) b.mult(r, s, coords(h.multiply(basis[r], basis[s])));
    TensorElement d = h.comultiply(basis[r]);
    TensorElement dr(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) dr(i, j) = d(piv[i], piv[j]);
    }
    // check the coproduct really lies in V (x) V
    ExactMatrix inc = ExactMatrix::from_columns(h.dim(), basis);
    if (dr.apply(inc, inc) != d) throw StructureError("restrict_to: subspace is not a subcoalgebra");
    b.comult(r, dr);
    Vec s_img = coords(h.antipode(basis[r]));
    for (std::size_t i = 0; i < m; ++i) {
      if (!s_img[i].is_zero()) b.antipode(r, i, s_img[i]);
    }
  }
  b.unit(coords(h.unit()));
  Vec eps(m);
  for (std::size_t r = 0; r < m; ++r) eps[r] = h.epsilon(basis[r]);
  b.counit(eps);
  return {b.build(), ExactMatrix::from_columns(h.dim(), basis)};
}

}  // namespace hopfkit
