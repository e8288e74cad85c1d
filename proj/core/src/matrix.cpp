#include "hopfkit/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloScalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec ExactMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ExactMatrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void ExactMatrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  ExactMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycloScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const CycloScalar& b = o(k, j);
        if (!b.is_zero()) p(i, j) += a * b;
      }
    }
  }
  return p;
}

Vec ExactMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const CycloScalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum mismatch");
  ExactMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) s.data_[i] += o.data_[i];
  }
  return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum mismatch");
  ExactMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) s.data_[i] -= o.data_[i];
  }
  return s;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

std::size_t ExactMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(
      data_.begin(), data_.end(), [](const CycloScalar& x) { return !x.is_zero(); }));
}

CycloScalar ExactMatrix::trace() const {
  CycloScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

RowReduction rref(const ExactMatrix& m) {
  RowReduction out{m, {}};
  ExactMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    CycloScalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      CycloScalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  RowReduction rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols);
    x[f] = CycloScalar(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const CycloScalar& v = rr.reduced(i, f);
      if (!v.is_zero()) x[rr.pivots[i]] = -v;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowReduction rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = CycloScalar(1);
  }
  RowReduction rr = rref(aug);
  if (rr.rank() < n || rr.pivots[n - 1] != n - 1) throw ArithmeticError("matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  }
  return inv;
}

std::vector<CycloScalar> charpoly(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix h = m;
  // similarity reduction to upper Hessenberg form
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t sub = col + 1;
    std::size_t i = sub;
    while (i < n && h(i, col).is_zero()) ++i;
    if (i == n) continue;
    if (i != sub) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(sub, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, sub));
    }
    CycloScalar inv = h(sub, col).inverse();
    for (std::size_t j = sub + 1; j < n; ++j) {
      if (h(j, col).is_zero()) continue;
      CycloScalar u = h(j, col) * inv;
      for (std::size_t k = 0; k < n; ++k) {
        if (!h(sub, k).is_zero()) h(j, k) -= u * h(sub, k);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!h(k, j).is_zero()) h(k, sub) += u * h(k, j);
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}, 1-indexed
  auto at = [&](std::size_t i, std::size_t j) -> const CycloScalar& { return h(i - 1, j - 1); };
  std::vector<std::vector<CycloScalar>> p(n + 1);
  p[0] = {CycloScalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<CycloScalar> pk(k + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      pk[d + 1] += p[k - 1][d];
      pk[d] -= at(k, k) * p[k - 1][d];
    }
    CycloScalar t(1);
    for (std::size_t i = 1; i < k; ++i) {
      t *= at(k - i + 1, k - i);
      if (t.is_zero()) break;
      CycloScalar coef = t * at(k - i, k);
      if (coef.is_zero()) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) pk[d] -= coef * p[k - i - 1][d];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

CycloScalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of a non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  CycloScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return CycloScalar();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    CycloScalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      CycloScalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const CycloScalar f = r[pivots_[i]];
    if (!f.is_zero()) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < r.size() && r[p].is_zero()) ++p;
  if (p == r.size()) return false;
  r = r[p].inverse() * r;
  for (auto& b : basis_) {
    const CycloScalar f = b[p];
    if (!f.is_zero()) axpy(b, -f, r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + idx, std::move(r));
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace s = *this;
  for (const auto& v : o.basis_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
  std::vector<Vec> cols = basis_;
  for (const auto& w : o.basis_) cols.push_back(CycloScalar(-1) * w);
  ExactMatrix m = ExactMatrix::from_columns(ambient_, cols);
  Subspace s(ambient_);
  for (const auto& k : kernel_basis(m)) {
    Vec v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, k[i], basis_[i]);
    s.insert(v);
  }
  return s;
}

}  // namespace hopfkit
