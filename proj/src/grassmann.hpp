#ifndef HPD_GRASSMANN_HPP
#define HPD_GRASSMANN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linalg.hpp"

namespace hpd {

using BigInt = boost::multiprecision::cpp_int;

/// Number of rank-r subspaces of F_q^m, exact.
BigInt gaussian_binomial(int m, int r, const BigInt& q);

/// Dimension of the Grassmannian of rank-r subspaces of F^{r+s} as a variety.
long grass_dim(int r, int s);

/// Degree of the Grassmannian: (rs)! * prod(0..s-1, i!) / prod(0..s-1, (r+i)!).
BigInt grass_degree(int r, int s);

/// Deterministic enumeration of all rank-r subspaces of F_q^m, each exactly
/// once: pivot sets in colexicographic order, free entries as a base-q
/// odometer (first free position in row-major order varies fastest).
/// Random access by position supports splitting scans into ranges.
class GrassmannIterator {
 public:
  GrassmannIterator(FieldPtr field, int m, int r);

  uint64_t size() const { return total_; }
  Subspace at(uint64_t pos) const;

 private:
  FieldPtr field_;
  int m_, r_;
  uint64_t total_;
  std::vector<std::vector<int>> pivot_sets_;        // colex order
  std::vector<std::vector<std::pair<int, int>>> free_pos_;  // row-major per set
  std::vector<uint64_t> prefix_;                    // cumulative counts
};

/// Uniformly random rank-r subspace: random r x m matrix, canonicalize,
/// reject rank deficiency.
Subspace sample_subspace(const FieldPtr& field, int m, int r, std::mt19937_64& rng);

}  // namespace hpd

#endif
