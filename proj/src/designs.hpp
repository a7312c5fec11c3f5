#ifndef HPD_DESIGNS_HPP
#define HPD_DESIGNS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyalg.hpp"

namespace hpd {

/// How a scan over candidate subspaces runs. Sampled scans report lower
/// bounds on the A parameters and are flagged as such in reports.
struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  uint64_t samples = 0;
  uint64_t seed = 0;

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode sampled(uint64_t n, uint64_t seed) {
    return {Kind::Sampled, n, seed};
  }
  /// "exhaustive" or "sampled:N" / "sampled:N:SEED" (default seed applies
  /// when the mode string omits it).
  static VerifyMode parse(const std::string& s, uint64_t default_seed);
  std::string to_string() const;
  bool exhaustive_kind() const { return kind == Kind::Exhaustive; }
};

struct ExecContext {
  int threads = 1;
  uint64_t budget = 10'000'000;  // candidate-subspace cap for exhaustive scans
};

struct MeasureResult {
  int value;
  Subspace witness;
  VerifyMode mode;
};

/// Exact count of members meeting W nontrivially (the weak statistic).
int count_meeting(const std::vector<Subspace>& members, const Subspace& w);
/// Exact sum of intersection ranks (the strong statistic).
int sum_intersection_ranks(const std::vector<Subspace>& members, const Subspace& w);

/// Max over rank-s subspaces W of the number of members meeting W; the
/// witness is the first maximizer in enumeration (or sample) order.
MeasureResult measure_weak(const std::vector<Subspace>& members, int s, const VerifyMode& mode,
                           const ExecContext& ctx);

/// Max over rank-s subspaces W of the intersection-rank sum.
MeasureResult measure_strong(const std::vector<Subspace>& members, int s, const VerifyMode& mode,
                             const ExecContext& ctx);

/// First rank-(m-codim) subspace meeting every member, in enumeration order,
/// or nullopt. codim is the projective co-dimension of the blocker.
std::optional<Subspace> find_blocker_exhaustive(const std::vector<Subspace>& members, int codim,
                                                const ExecContext& ctx);

/// Constructive blocker search following the hyperplane/trace induction,
/// with exhaustive transversal search as the k = 1 base case. Requires the
/// member count to satisfy the induction hypothesis bound.
std::optional<Subspace> find_blocker_greedy(const std::vector<Subspace>& members,
                                            const ExecContext& ctx);

struct GeneratorVerdict {
  bool is_generator;
  std::optional<Subspace> failing;  // a co-k-subspace not spanned by the traces
  VerifyMode mode;
};

/// Checks that every co-k-subspace Pi is spanned by its intersections with
/// the members.
GeneratorVerdict is_generator_set(const std::vector<Subspace>& members, int k,
                                  const VerifyMode& mode, const ExecContext& ctx);

struct HpVerdict {
  bool is_generator;
  std::optional<Subspace> blocker;
  /// Set when |members| > |F|: the no-blocker criterion is then only
  /// sufficient, so the verdict falls back to the generator-set definition.
  bool equivalence_hypothesis_failed = false;
};

HpVerdict hp_check(const std::vector<Subspace>& members, const ExecContext& ctx);

std::vector<Subspace> dualize(const std::vector<Subspace>& members);

/// min{q, sum_{i=0}^{k} floor((d-k+i)/(i+1))} + 1; pass nullopt for an
/// infinite field.
long long generator_set_lower_bound(int d, int k, std::optional<BigInt> q);

/// (k+1)(d-k) + 1, the algebraically closed floor, reported alongside.
long long closed_field_lower_bound(int d, int k);

struct StrongPolyCrosscheck {
  int rank_sum;           // sum over t of rank(H(t)^perp meet W^perp)
  bool det_zero;          // determinant vanished identically (diagnostic)
  int multiplicity_sum;   // sum over t of root multiplicities of det M
  int det_degree;         // degree of det M (0 when det_zero)
  int degree_bound;       // s (d - s + 1)
};

/// Compares the direct intersection ranks with the polynomial-matrix route;
/// enforces rank_sum <= multiplicity_sum <= det_degree <= s(d-s+1) whenever
/// the determinant is nonzero.
StrongPolyCrosscheck crosscheck_strong_poly(const Design& design, const Subspace& w);

struct DesignReport {
  int n_members = 0;
  int s = 0;
  std::optional<MeasureResult> weak;
  std::optional<MeasureResult> strong;
  std::optional<HpVerdict> hp;
  VerifyMode mode;
};

/// Runs the requested measurements on a member family with s = m - r.
DesignReport verify_design(const std::vector<Subspace>& members, bool check_weak,
                           bool check_strong, bool check_hp, const VerifyMode& mode,
                           const ExecContext& ctx);

}  // namespace hpd

#endif
