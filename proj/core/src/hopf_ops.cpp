#include "hopfkit/hopf_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopfkit {

Vec adjoint_action(const FiniteDimHopf& h, const Vec& x, const Vec& a) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : h.comult_terms(i)) {
      Vec left = h.multiply(h.basis_vector(t.left), a);
      if (is_zero_vec(left)) continue;
      Vec s = h.antipode_matrix().column(t.right);
      axpy(out, x[i] * t.coeff, h.multiply(left, s));
    }
  }
  return out;
}

ExactMatrix adjoint_matrix(const FiniteDimHopf& h, std::size_t i) {
  const std::size_t n = h.dim();
  ExactMatrix m(n, n);
  Vec e = h.basis_vector(i);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, adjoint_action(h, e, h.basis_vector(j)));
  return m;
}

// ------------------------------------------------------------- radicals

Subspace jacobson_radical(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  Vec t(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& term : h.mult_terms(k, i)) {
        if (term.index == i) t[k] += term.coeff;
      }
    }
  }
  ExactMatrix form(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& term : h.mult_terms(a, b)) {
        if (!t[term.index].is_zero()) form(a, b) += term.coeff * t[term.index];
      }
    }
  }
  return Subspace::span(n, kernel_basis(form.transpose()));
}

Subspace two_sided_ideal(const FiniteDimHopf& h, const Subspace& s) {
  Subspace ideal = s;
  const std::size_t n = h.dim();
  for (std::size_t round = 0; round <= n; ++round) {
    const std::vector<Vec> basis = ideal.basis();
    bool grew = false;
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec e = h.basis_vector(i);
        grew |= ideal.insert(h.multiply(e, v));
        grew |= ideal.insert(h.multiply(v, e));
      }
    }
    if (!grew) return ideal;
  }
  throw StructureError("internal error: ideal closure did not stabilise");
}

Subspace commutator_ideal(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  Subspace s(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) s.insert(h.multiply_basis(a, b) - h.multiply_basis(b, a));
  }
  return two_sided_ideal(h, s);
}

// ---------------------------------------------------------- group-likes

namespace {

struct GroupLikeSearch {
  const FiniteDimHopf& h;
  std::size_t n;
  std::vector<CycloScalar> candidates;
  std::vector<ExactMatrix> eigen_ops;  // transpose of L_{e^j} in H*
  std::map<std::size_t, std::vector<CycloScalar>> roots;
  std::vector<Vec> found;

  const std::vector<CycloScalar>& roots_of(std::size_t j) {
    auto it = roots.find(j);
    if (it != roots.end()) return it->second;
    std::vector<CycloScalar> p = charpoly(eigen_ops[j].transpose());
    std::vector<CycloScalar> r;
    for (const auto& lambda : candidates) {
      CycloScalar v;
      for (std::size_t d = p.size(); d-- > 0;) v = v * lambda + p[d];
      if (v.is_zero()) r.push_back(lambda);
    }
    return roots.emplace(j, std::move(r)).first->second;
  }

  bool is_group_like(const Vec& c) const {
    if (!(h.epsilon(c) == CycloScalar(1))) return false;
    return h.comultiply(c) == TensorElement::outer(c, c);
  }

  // rows of `sys` are [a | b] meaning a . c = b, kept in reduced echelon form
  void explore(const ExactMatrix& sys) {
    RowReduction rr = rref(sys);
    if (!rr.pivots.empty() && rr.pivots.back() == n) return;  // inconsistent
    std::vector<bool> pivot(n, false);
    for (auto p : rr.pivots) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c) {
      if (!pivot[c]) free.push_back(c);
    }
    ExactMatrix reduced(rr.rank(), n + 1);
    for (std::size_t r = 0; r < rr.rank(); ++r) reduced.set_row(r, rr.reduced.row(r));
    if (free.empty()) {
      Vec c(n);
      for (std::size_t r = 0; r < rr.rank(); ++r) c[rr.pivots[r]] = rr.reduced(r, n);
      if (is_group_like(c)) found.push_back(std::move(c));
      return;
    }
    // first coordinate not yet fixed by the system
    std::size_t j = n;
    for (std::size_t c = 0; c < n && j == n; ++c) {
      if (!pivot[c]) {
        j = c;
        break;
      }
      std::size_t r = static_cast<std::size_t>(
          std::find(rr.pivots.begin(), rr.pivots.end(), c) - rr.pivots.begin());
      for (auto f : free) {
        if (!rr.reduced(r, f).is_zero()) {
          j = c;
          break;
        }
      }
    }
    for (const auto& lambda : roots_of(j)) {
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < reduced.rows(); ++r) rows.push_back(reduced.row(r));
      Vec fix(n + 1);
      fix[j] = CycloScalar(1);
      fix[n] = lambda;
      rows.push_back(fix);
      const ExactMatrix& m = eigen_ops[j];
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = m(k, i);
        row[k] -= lambda;
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
      }
      explore(ExactMatrix::from_rows(n + 1, rows));
    }
  }
};

int structure_conductor(const FiniteDimHopf& h) {
  int l = 1;
  auto absorb = [&](const CycloScalar& c) { l = std::lcm(l, c.conductor()); };
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (const auto& t : h.comult_terms(i)) absorb(t.coeff);
    for (std::size_t j = 0; j < h.dim(); ++j) {
      for (const auto& t : h.mult_terms(i, j)) absorb(t.coeff);
    }
    absorb(h.counit()[i]);
    absorb(h.unit()[i]);
  }
  return l;
}

}  // namespace

GroupLikes group_likes(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  HopfPtr hd = dual(h);
  GroupLikes out;
  out.certified_count = n - jacobson_radical(*hd).sum(commutator_ideal(*hd)).dim();

  GroupLikeSearch s{h, n, {}, {}, {}, {}};
  const int l = std::lcm(std::lcm(2, static_cast<int>(n)), structure_conductor(h));
  s.candidates.push_back(CycloScalar());
  for (int k = 0; k < l; ++k) s.candidates.push_back(CycloScalar::root_of_unity(l, k));
  for (std::size_t j = 0; j < n; ++j) {
    // (row k) . c = sum_i Delta_i^{jk} c_i
    s.eigen_ops.push_back(hd->left_mult_matrix(hd->basis_vector(j)).transpose());
  }

  // counit and cocommutativity of c (x) c are linear constraints
  std::vector<Vec> rows;
  Vec eps_row(n + 1);
  for (std::size_t i = 0; i < n; ++i) eps_row[i] = h.counit()[i];
  eps_row[n] = CycloScalar(1);
  rows.push_back(eps_row);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = s.eigen_ops[a](b, i) - s.eigen_ops[b](a, i);
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  }
  s.explore(rref(ExactMatrix::from_rows(n + 1, rows)).reduced);

  // deduplicate and order: identity first, then by canonical text
  std::vector<std::pair<std::vector<std::string>, Vec>> keyed;
  for (auto& c : s.found) {
    std::vector<std::string> key;
    for (const auto& x : c) key.push_back(x.to_string());
    keyed.emplace_back(std::move(key), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  for (auto& kv : keyed) {
    if (kv.second == h.unit()) out.elements.insert(out.elements.begin(), kv.second);
    else out.elements.push_back(kv.second);
  }
  if (out.elements.size() != out.certified_count) {
    throw ArithmeticError("group-like search found " + std::to_string(out.elements.size()) +
                          " elements but the certificate requires " + std::to_string(out.certified_count));
  }
  const std::size_t m = out.elements.size();
  out.table.assign(m, std::vector<std::size_t>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Vec p = h.multiply(out.elements[a], out.elements[b]);
      auto it = std::find(out.elements.begin(), out.elements.end(), p);
      if (it == out.elements.end()) throw ArithmeticError("internal error: group-likes not closed");
      out.table[a][b] = static_cast<std::size_t>(it - out.elements.begin());
    }
  }
  return out;
}

// ------------------------------------------------------------- integrals

namespace {

Vec normalised_integral(const FiniteDimHopf& h, bool left) {
  const std::size_t n = h.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = h.basis_vector(i);
    ExactMatrix m = left ? h.left_mult_matrix(e) : h.right_mult_matrix(e);
    for (std::size_t k = 0; k < n; ++k) m(k, k) -= h.counit()[i];
    for (std::size_t r = 0; r < n; ++r) {
      Vec row = m.row(r);
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  }
  std::vector<Vec> k = rows.empty() ? std::vector<Vec>{} : kernel_basis(ExactMatrix::from_rows(n, rows));
  if (k.size() != 1) {
    throw StructureError("space of " + std::string(left ? "left" : "right") + " integrals has dimension " +
                         std::to_string(k.size()) + ", expected 1");
  }
  Vec v = k[0];
  CycloScalar e = h.epsilon(v);
  if (!e.is_zero()) return (CycloScalar(static_cast<std::int64_t>(n)) / e) * v;
  for (const auto& x : v) {
    if (!x.is_zero()) return x.inverse() * v;
  }
  return v;
}

Vec modular_function(const FiniteDimHopf& h, const Vec& left_integral) {
  const std::size_t n = h.dim();
  std::size_t p = 0;
  while (left_integral[p].is_zero()) ++p;
  Vec alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = h.multiply(left_integral, h.basis_vector(i));
    alpha[i] = v[p] / left_integral[p];
    if (v != alpha[i] * left_integral) throw StructureError("left integral is not an eigenvector of right multiplication");
  }
  return alpha;
}

}  // namespace

Integrals integrals(const FiniteDimHopf& h) {
  Integrals out;
  out.left = normalised_integral(h, true);
  out.right = normalised_integral(h, false);
  out.alpha = modular_function(h, out.left);
  out.unimodular = out.alpha == h.counit();
  out.semisimple = !h.epsilon(out.left).is_zero();
  HopfPtr hd = dual(h);
  out.g = modular_function(*hd, normalised_integral(*hd, true));
  return out;
}

CycloScalar trace_s_squared(const FiniteDimHopf& h) {
  return (h.antipode_matrix() * h.antipode_matrix()).trace();
}

bool is_semisimple(const FiniteDimHopf& h) {
  return !h.epsilon(normalised_integral(h, true)).is_zero();
}

}  // namespace hopfkit
