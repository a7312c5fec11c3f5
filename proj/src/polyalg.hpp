#ifndef HPD_POLYALG_HPP
#define HPD_POLYALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "constructions.hpp"

namespace hpd {

/// Univariate polynomial over GF(q), coefficients constant term first,
/// trailing zeros trimmed. The zero polynomial has an empty coefficient list
/// and no degree (nullopt), never degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<uint32_t> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly constant(FieldPtr field, uint32_t c);
  static Poly x(FieldPtr field);
  /// (X - t)
  static Poly linear_root(FieldPtr field, uint32_t t);

  const FieldPtr& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  uint32_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
  }

  uint32_t eval(uint32_t t) const;

  bool operator==(const Poly& o) const { return c_ == o.c_ && field_->same(*o.field_); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(uint32_t c) const;

  /// Exact division; throws Internal when the remainder is nonzero and
  /// DivisionByZero on a zero divisor.
  static Poly div_exact(const Poly& a, const Poly& b);

  /// Quotient and remainder of division by (X - t).
  std::pair<Poly, uint32_t> div_linear_root(uint32_t t) const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<uint32_t> c_;
};

struct PolyMatrix {
  PolyMatrix(FieldPtr field, int n)
      : field(std::move(field)), n(n),
        e(static_cast<size_t>(n) * static_cast<size_t>(n), Poly::zero(this->field)) {}
  Poly& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const Poly& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

  FieldPtr field;
  int n;
  std::vector<Poly> e;
};

/// The covector-to-polynomial operator: z maps to
/// sum_i z_i h(i,n) X^{i-n}, a genuine polynomial of degree <= d-n when the
/// scheme satisfies h(i,n) = 0 for all i < n; n = 0 returns P_z itself.
Poly covector_poly(const std::vector<uint32_t>& z, const CoefficientScheme& scheme, int n);

/// Gaussian reduction from the right: reorders/combines the rows so row j
/// (1-based) has its last j-1 coordinates zero, i.e. deg P_{b(j)} <= d-j+1.
Matrix reduce_covector_basis(const Matrix& rows);

/// The r x r matrix with entry (n, j) = P_{b(j)}^{[n]}(X) for a reduced
/// basis b(1..r); its kernel at X = t matches H(t)^perp meet W^perp.
PolyMatrix build_matrix(const Matrix& reduced_basis, const CoefficientScheme& scheme);

/// Determinant over F[X]: Leibniz expansion for n <= 3, fraction-free
/// Gaussian elimination (exact divisions) for larger sizes.
Poly polymat_det(const PolyMatrix& m);

/// Largest e with (X-t)^e dividing p, by repeated synthetic division.
int root_multiplicity(const Poly& p, uint32_t t);

/// Rank of the kernel of M evaluated at t.
int kernel_rank_at(const PolyMatrix& m, uint32_t t);

}  // namespace hpd

#endif
