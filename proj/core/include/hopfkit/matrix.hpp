#pragma once

#include "hopfkit/cyclo.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

/// Dense row-major matrix over the cyclotomic numbers.
///
/// For matrices of linear maps the convention is column j = image of e_j.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static ExactMatrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  void set_row(std::size_t r, const Vec& v);

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  Vec operator*(const Vec& v) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  bool is_zero() const;
  std::size_t nonzeros() const;
  CycloScalar trace() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloScalar> data_;
};

/// Reduced row echelon form from Gauss-Jordan elimination with field
/// division. Pivot search is deterministic: leftmost column, lowest row.
struct RowReduction {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowReduction rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vec> kernel_basis(const ExactMatrix& m);
/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const ExactMatrix& m, const Vec& b);
/// Throws ArithmeticError when singular.
ExactMatrix inverse(const ExactMatrix& m);
/// Characteristic polynomial det(xI - m), lowest degree first (Hessenberg reduction).
std::vector<CycloScalar> charpoly(const ExactMatrix& m);
CycloScalar determinant(const ExactMatrix& m);

/// Linear subspace of k^n, stored as the rows of its reduced echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Subspace& o) const;
  /// Adds v if it is not already contained; returns whether the dimension grew.
  bool insert(const Vec& v);

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void rebuild(std::vector<Vec> rows);

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hopfkit
