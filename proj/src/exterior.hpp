#ifndef HPD_EXTERIOR_HPP
#define HPD_EXTERIOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace hpd {

/// Strictly increasing r-tuple of column indices below m.
using IndexTuple = std::vector<int>;

uint64_t binomial(int n, int k);

/// Lexicographic position of a strictly increasing tuple among all C(m,r).
uint64_t tuple_rank(const IndexTuple& t, int m);
IndexTuple tuple_unrank(uint64_t pos, int m, int r);
/// Advances t to its lexicographic successor; false when t was the last tuple.
bool next_tuple(IndexTuple& t, int m);
std::string tuple_to_string(const IndexTuple& t);

/// Coordinate vector on the Pluecker embedding: one field element per
/// strictly increasing r-tuple, laid out in lexicographic tuple order and
/// normalized so the first nonzero coordinate is 1.
class PlueckerVector {
 public:
  static PlueckerVector from_coords(FieldPtr field, int m, int r, std::vector<uint32_t> coords);

  const FieldPtr& field() const { return field_; }
  int m() const { return m_; }
  int r() const { return r_; }
  const std::vector<uint32_t>& coords() const { return c_; }

  uint32_t at(uint64_t pos) const { return c_[pos]; }
  uint32_t at(const IndexTuple& t) const { return c_[tuple_rank(t, m_)]; }

  /// Antisymmetric lookup: indices in any order, zero on repeats.
  uint32_t signed_at(const std::vector<int>& indices) const;

  bool operator==(const PlueckerVector& o) const {
    return m_ == o.m_ && r_ == o.r_ && c_ == o.c_ && field_->same(*o.field_);
  }

 private:
  PlueckerVector(FieldPtr field, int m, int r, std::vector<uint32_t> coords)
      : field_(std::move(field)), m_(m), r_(r), c_(std::move(coords)) {}
  FieldPtr field_;
  int m_, r_;
  std::vector<uint32_t> c_;
};

/// Pluecker coordinates of a rank-r subspace: the r x r minors of its basis
/// matrix, tuple (i_1..i_r) selecting columns, normalized.
PlueckerVector pluecker(const Subspace& h);

/// Pluecker coordinates of the orthogonal complement of W (r-index tuples
/// for a rank-s subspace with r = m - s).
PlueckerVector dual_pluecker(const Subspace& w);

/// Bilinear sum over all tuples of the coordinate products.
uint32_t pairing(const PlueckerVector& wstar, const PlueckerVector& h);

/// Meet detection via the pairing: with rank H + rank W = m,
/// H and W intersect nontrivially iff <W*|H> = 0.
bool meets(const Subspace& h, const Subspace& w);

/// Independent meet test through intersection ranks.
bool meets_by_rank(const Subspace& h, const Subspace& w);

struct RelationViolation {
  IndexTuple prefix;  // r-1 indices
  IndexTuple jlist;   // r+1 indices
  uint32_t value;     // nonzero evaluation
};

/// Checks every quadratic Pluecker relation on v; nullopt when all vanish.
std::optional<RelationViolation> relations_check(const PlueckerVector& v);

struct RelationTerm {
  int sign;  // +1 or -1
  IndexTuple a, b;
};

/// A single Pluecker relation of the shape H_i H_j + sum of straddling
/// products; vanishes on every decomposable coordinate vector.
class Relation {
 public:
  Relation(IndexTuple lead_i, IndexTuple lead_j, std::vector<RelationTerm> terms)
      : lead_i_(std::move(lead_i)), lead_j_(std::move(lead_j)), terms_(std::move(terms)) {}

  const IndexTuple& lead_i() const { return lead_i_; }
  const IndexTuple& lead_j() const { return lead_j_; }
  /// All terms including the leading +1 * H_i * H_j.
  const std::vector<RelationTerm>& terms() const { return terms_; }

  uint32_t evaluate(const PlueckerVector& v) const;

 private:
  IndexTuple lead_i_, lead_j_;
  std::vector<RelationTerm> terms_;
};

/// The relation of the straddling-sums lemma for two distinct increasing
/// tuples with equal index sums.
Relation relation_for_pair(const IndexTuple& i, const IndexTuple& j, int m);

}  // namespace hpd

#endif
