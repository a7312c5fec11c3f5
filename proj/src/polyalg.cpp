#include "polyalg.hpp"

#include <algorithm>
#include <numeric>

namespace hpd {

Poly::Poly(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, uint32_t c) { return Poly(std::move(field), {c}); }

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::linear_root(FieldPtr field, uint32_t t) {
  uint32_t neg_t = field->neg(t);
  return Poly(std::move(field), {neg_t, 1});
}

uint32_t Poly::eval(uint32_t t) const {
  const Field& f = *field_;
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, t), c_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& f = *a.field_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& f = *a.field_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f.sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  const Field& f = *a.field_;
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(c));
}

Poly Poly::scaled(uint32_t s) const {
  const Field& f = *field_;
  std::vector<uint32_t> c = c_;
  for (auto& v : c) v = f.mul(v, s);
  return Poly(field_, std::move(c));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly::zero(a.field_);
  const Field& f = *a.field_;
  std::vector<uint32_t> rem = a.c_;
  const int db = *b.degree();
  const int da = *a.degree();
  if (da < db) fail(Err::Internal, "inexact polynomial division");
  std::vector<uint32_t> quot(static_cast<size_t>(da - db + 1), 0);
  uint32_t lead_inv = f.inv(b.c_.back());
  for (int i = da - db; i >= 0; --i) {
    uint32_t c = f.mul(rem[static_cast<size_t>(i + db)], lead_inv);
    quot[static_cast<size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i + j)] =
          f.sub(rem[static_cast<size_t>(i + j)], f.mul(c, b.c_[static_cast<size_t>(j)]));
  }
  if (!std::all_of(rem.begin(), rem.end(), [](uint32_t v) { return v == 0; }))
    fail(Err::Internal, "inexact polynomial division");
  return Poly(a.field_, std::move(quot));
}

std::pair<Poly, uint32_t> Poly::div_linear_root(uint32_t t) const {
  if (is_zero()) fail(Err::ZeroPolynomial, "division of the zero polynomial");
  const Field& f = *field_;
  // Synthetic division by (X - t).
  std::vector<uint32_t> q(c_.size() - 1, 0);
  uint32_t carry = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    uint32_t v = f.add(c_[i], f.mul(carry, t));
    if (i == 0) return {Poly(field_, std::move(q)), v};
    q[i - 1] = v;
    carry = v;
  }
  return {Poly(field_, std::move(q)), carry};  // unreachable for nonempty c_
}

Poly covector_poly(const std::vector<uint32_t>& z, const CoefficientScheme& scheme, int n) {
  if (n < 0 || n > scheme.k())
    fail(Err::ParameterOutOfRange, "operator level n must lie in [0, k]");
  const int d = scheme.d();
  if (static_cast<int>(z.size()) != d + 1)
    fail(Err::ShapeMismatch, "covector length must be d+1");
  for (int i = 0; i < n; ++i)
    if (scheme.h(i, n) != 0)
      fail(Err::NonPolynomialScheme, "scheme has h(" + std::to_string(i) + "," +
                                         std::to_string(n) + ") != 0 below the diagonal");
  const Field& f = *scheme.field();
  std::vector<uint32_t> c(static_cast<size_t>(d - n + 1), 0);
  for (int i = n; i <= d; ++i)
    c[static_cast<size_t>(i - n)] = f.mul(z[static_cast<size_t>(i)], scheme.h(i, n));
  return Poly(scheme.field(), std::move(c));
}

Matrix reduce_covector_basis(const Matrix& rows) {
  const int m = rows.cols();
  Matrix reversed(rows.field(), rows.rows(), m);
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < m; ++j) reversed.at(i, j) = rows.at(i, m - 1 - j);
  RrefResult r = rref(reversed);
  Matrix out(rows.field(), r.rank, m);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = r.mat.at(i, m - 1 - j);
  return out;
}

PolyMatrix build_matrix(const Matrix& reduced_basis, const CoefficientScheme& scheme) {
  const int r = scheme.r();
  const int d = scheme.d();
  if (reduced_basis.rows() != r)
    fail(Err::ShapeMismatch, "basis row count must equal r");
  if (reduced_basis.cols() != d + 1)
    fail(Err::ShapeMismatch, "covector length must be d+1");
  for (int j = 0; j < r; ++j)
    for (int i = d - j + 1; i <= d; ++i)
      if (reduced_basis.at(j, i) != 0)
        fail(Err::ParameterOutOfRange,
             "basis not reduced: row " + std::to_string(j + 1) + " exceeds degree " +
                 std::to_string(d - j));
  PolyMatrix m(scheme.field(), r);
  for (int n = 0; n < r; ++n)
    for (int j = 0; j < r; ++j) m.at(n, j) = covector_poly(reduced_basis.row(j), scheme, n);
  return m;
}

namespace {

Poly det_leibniz(const PolyMatrix& m) {
  const int n = m.n;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Poly acc = Poly::zero(m.field);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    Poly prod = Poly::constant(m.field, 1);
    for (int i = 0; i < n && !prod.is_zero(); ++i)
      prod = prod * m.at(i, perm[static_cast<size_t>(i)]);
    acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Fraction-free (Bareiss) elimination with row pivoting; divisions are exact
// over F[X].
Poly det_bareiss(const PolyMatrix& m) {
  const int n = m.n;
  PolyMatrix a = m;
  bool negate = false;
  Poly prev = Poly::constant(m.field, 1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Poly::zero(m.field);
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num.is_zero() ? std::move(num) : Poly::div_exact(num, prev);
      }
      a.at(i, k) = Poly::zero(m.field);
    }
    prev = a.at(k, k);
  }
  Poly det = a.at(n - 1, n - 1);
  return negate ? Poly::zero(m.field) - det : det;
}

}  // namespace

Poly polymat_det(const PolyMatrix& m) {
  if (m.n == 0) return Poly::constant(m.field, 1);
  if (m.n <= 3) return det_leibniz(m);
  return det_bareiss(m);
}

int root_multiplicity(const Poly& p, uint32_t t) {
  if (p.is_zero()) fail(Err::ZeroPolynomial, "root multiplicity of the zero polynomial");
  Poly cur = p;
  int mult = 0;
  while (!cur.is_zero() && cur.eval(t) == 0) {
    cur = cur.div_linear_root(t).first;
    ++mult;
  }
  return mult;
}

int kernel_rank_at(const PolyMatrix& m, uint32_t t) {
  Matrix at_t(m.field, m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) at_t.at(i, j) = m.at(i, j).eval(t);
  return m.n - rref(at_t).rank;
}

}  // namespace hpd
