#ifndef HPD_LINALG_HPP
#define HPD_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace hpd {

/// Dense row-major matrix of field element codes.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}
  Matrix(FieldPtr field, int rows, int cols, std::vector<uint32_t> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {}

  static Matrix identity(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<uint32_t>& entries() const { return a_; }

  std::vector<uint32_t> row(int i) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same(*o.field_);
  }

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

struct RrefResult {
  Matrix mat;
  int rank;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

/// Reduced row echelon form; preserves the row space.
RrefResult rref(const Matrix& m);

/// Rows spanning the right kernel {x : M x^T = 0}; rank + kernel rank = cols.
Matrix kernel_basis(const Matrix& m);

/// Determinant of a square matrix by Gaussian elimination.
uint32_t determinant(const Matrix& m);

/// Matrix-vector and row-combination helpers.
std::vector<uint32_t> mat_vec_rows(const Matrix& m, const std::vector<uint32_t>& x);

/// A rank-r linear subspace of F_q^m held as its canonical RREF basis with no
/// zero rows. Equal subspaces have identical bases, so == is structural.
class Subspace {
 public:
  static Subspace from_rows(const Matrix& rows);
  static Subspace zero(FieldPtr field, int m);
  static Subspace full(FieldPtr field, int m);

  const FieldPtr& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<uint32_t>& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v with respect to the RREF basis; v must lie in the span.
  std::vector<uint32_t> coordinates_of(const std::vector<uint32_t>& v) const;

 private:
  explicit Subspace(Matrix basis, std::vector<int> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace join(const Subspace& u, const Subspace& v);
Subspace orthogonal_complement(const Subspace& u);

/// Text format: header "m=<ambient> q=<fieldspec>", one basis row per line.
std::string subspace_to_text(const Subspace& s);
Subspace subspace_from_text(const std::string& text);

}  // namespace hpd

#endif
