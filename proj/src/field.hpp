#ifndef HPD_FIELD_HPP
#define HPD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace hpd {

/// Exact arithmetic in GF(p^h) with an explicit monic irreducible modulus.
///
/// Elements are passed around as canonical integer codes in [0, q): the
/// base-p digits of a code are the coefficients of the residue polynomial,
/// constant term first. Code 0 is the zero element, code 1 the unit.
/// A Field is immutable after construction and safe to share across threads.
class Field {
 public:
  /// Builds GF(p^h). When no modulus is given, the lexicographically least
  /// monic irreducible polynomial of degree h (coefficient tuple ordered
  /// constant-first) is selected by exhaustive scan.
  static std::shared_ptr<const Field> make(uint64_t p, int h,
                                           std::optional<std::vector<uint32_t>> modulus = {});

  /// Parses "p", "p^h" or "p^h:modulus=c0,c1,...,1".
  static std::shared_ptr<const Field> parse(const std::string& spec);

  uint64_t p() const { return p_; }
  int h() const { return h_; }
  uint64_t q() const { return q_; }
  /// Monic modulus of degree h, constant term first (length h+1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  /// Canonical spec string: "p" for prime fields, else "p^h:modulus=...".
  std::string spec_string() const;

  bool same(const Field& other) const {
    return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
  }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws DivisionByZero on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  /// Power with a possibly negative exponent; requires a != 0 when e < 0.
  uint32_t pow_i(uint32_t a, int64_t e) const;

  /// Embeds an integer through the prime subfield (n mod p).
  uint32_t from_int(int64_t n) const;

  /// Least n >= 1 with a^n = 1; divides q-1. Throws ZeroElement on 0.
  uint64_t element_order(uint32_t a) const;

  /// First element (in canonical code order) of multiplicative order >= n,
  /// or nullopt when q-1 < n.
  std::optional<uint32_t> element_of_order_at_least(uint64_t n) const;

  std::vector<uint32_t> to_coeffs(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

 private:
  Field(uint64_t p, int h, std::vector<uint32_t> modulus);
  void build_tables();
  uint32_t mul_direct(uint32_t a, uint32_t b) const;

  uint64_t p_;
  int h_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;

  bool has_tables_ = false;
  std::vector<uint32_t> mul_tab_;  // q*q
  std::vector<uint32_t> inv_tab_;  // q
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws FieldMismatch unless the two fields have identical specs.
void require_same_field(const Field& a, const Field& b);

}  // namespace hpd

#endif
