#ifndef HPD_CONSTRUCTIONS_HPP
#define HPD_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exterior.hpp"
#include "grassmann.hpp"

namespace hpd {

enum class Family { Tangent, Diverted, Secant };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

/// A named coefficient table h(i, n) on 0 <= i <= d, 0 <= n <= k together
/// with the design parameters (r, s, omega) that generate {H(t) | t in F}.
///
///   tangent:  h(i,n) = i!/(i-n)!     for i >= n, else 0   (char F > r+s)
///   diverted: h(i,n) = omega^{n(i-r)} for i >= r or i = n < r, else 0
///   secant:   h(i,n) = omega^{n i}   everywhere
class CoefficientScheme {
 public:
  CoefficientScheme(FieldPtr field, Family family, int r, int s,
                    std::optional<uint32_t> omega = {});

  const FieldPtr& field() const { return field_; }
  Family family() const { return family_; }
  int r() const { return r_; }
  int s() const { return s_; }
  int d() const { return r_ + s_ - 1; }
  int k() const { return r_ - 1; }
  int m() const { return r_ + s_; }
  std::optional<uint32_t> omega() const { return omega_; }

  uint32_t h(int i, int n) const;

  /// True when h(i,n) = 0 for all i < n, so the covector operators stay
  /// polynomials (tangent and diverted; not secant).
  bool polynomial() const { return family_ != Family::Secant; }

  /// Enforces the per-family invariants; throws InvalidScheme.
  void validate() const;

 private:
  FieldPtr field_;
  Family family_;
  int r_, s_;
  std::optional<uint32_t> omega_;
};

/// The moment curve point (1, t, t^2, ..., t^d).
std::vector<uint32_t> moment_point(const Field& f, uint32_t t, int d);

/// Coefficient determinant h(i_1,...,i_r): det of the r x r matrix with
/// entry (n, l) = h(i_l, n). For the tangent scheme this is the Vandermonde
/// determinant of the integer indices reduced into F.
uint32_t scheme_coeff(const CoefficientScheme& scheme, const IndexTuple& tuple);

struct CoeffScan {
  bool all_nonzero;
  std::optional<IndexTuple> offending;
};

/// Scans every r-tuple; reports the first vanishing coefficient if any.
CoeffScan check_coeffs_nonzero(const CoefficientScheme& scheme);

/// First omega (canonical code order) making every coefficient nonzero.
std::optional<uint32_t> find_omega(const FieldPtr& field, int r, int s, Family family);

/// det of the matrix V_{k,l} = a_k^{j_l} for strictly increasing exponents.
uint32_t generalized_vandermonde(const FieldPtr& field, const std::vector<int>& exponents,
                                 const std::vector<uint32_t>& elements);

/// Exact bookkeeping for Sigma(sigma) = sum b_k j_{sigma k} over S_N:
/// the identity permutation attains the max, the opposite one the min, and
/// 2 * (max - min) <= N (d-r)(r-1). leading_degree_bound is the exact sum
/// sum_{k=0}^{N-1} (d-r-k)(r-1-k) dominating Sigma(ident).
struct SigmaBounds {
  long long sigma_ident;
  long long sigma_opp;
  long long spread_bound_times_two;  // N (d-r) (r-1)
  long long leading_degree_bound;
};

SigmaBounds sigma_bounds(const std::vector<int>& j, const std::vector<int>& b, int d, int r);

/// Which of the size/characteristic conditions guaranteeing an r-uniform
/// strong (s, r*s) design hold for this field.
struct ExistenceReport {
  bool char_zero;          // never true for finite fields
  bool char_gt_m;          // char F > r+s
  bool size_gt_binom;      // |F| > C(r+s,r) C(r,2) (s-1)
  bool size_gt_char_pow;   // |F| > p^{C(r,2)(s-1)}
};

ExistenceReport existence_conditions(int r, int s, const Field& f);

struct DesignMember {
  uint32_t t;
  Subspace h;
  PlueckerVector plk;
};

/// The family {H(t) | t in F}: every member carries both its subspace and
/// its Pluecker vector, and the two representations are checked against
/// each other at build time.
class Design {
 public:
  static Design build(const CoefficientScheme& scheme);

  const CoefficientScheme& scheme() const { return scheme_; }
  const std::vector<DesignMember>& members() const { return members_; }
  std::vector<Subspace> member_subspaces() const;

 private:
  Design(CoefficientScheme scheme, std::vector<DesignMember> members)
      : scheme_(std::move(scheme)), members_(std::move(members)) {}
  CoefficientScheme scheme_;
  std::vector<DesignMember> members_;
};

}  // namespace hpd

#endif
