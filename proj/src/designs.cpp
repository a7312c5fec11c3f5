#include "designs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace hpd {

VerifyMode VerifyMode::parse(const std::string& s, uint64_t default_seed) {
  if (s == "exhaustive") return exhaustive();
  const std::string key = "sampled:";
  if (s.rfind(key, 0) == 0) {
    std::string rest = s.substr(key.size());
    auto colon = rest.find(':');
    try {
      if (colon == std::string::npos)
        return sampled(std::stoull(rest), default_seed);
      return sampled(std::stoull(rest.substr(0, colon)), std::stoull(rest.substr(colon + 1)));
    } catch (const std::exception&) {
      fail(Err::Parse, "bad mode '" + s + "'");
    }
  }
  fail(Err::Parse, "bad mode '" + s + "' (want exhaustive or sampled:N[:SEED])");
}

std::string VerifyMode::to_string() const {
  if (kind == Kind::Exhaustive) return "exhaustive";
  return "sampled:" + std::to_string(samples) + ":" + std::to_string(seed);
}

namespace {

struct FamilyShape {
  FieldPtr field;
  int m;
  int r;
};

FamilyShape family_shape(const std::vector<Subspace>& members) {
  if (members.empty()) fail(Err::ParameterOutOfRange, "empty member list");
  const FamilyShape shape{members.front().field(), members.front().ambient(),
                          members.front().rank()};
  for (const auto& h : members) {
    require_same_field(*h.field(), *shape.field);
    if (h.ambient() != shape.m) fail(Err::AmbientMismatch, "members in different ambient spaces");
    if (h.rank() != shape.r) fail(Err::ShapeMismatch, "members of mixed rank");
  }
  return shape;
}

void check_budget(const FamilyShape& shape, int rank, const ExecContext& ctx) {
  BigInt count = gaussian_binomial(shape.m, rank, BigInt(shape.field->q()));
  if (count > BigInt(ctx.budget))
    fail(Err::BudgetExceeded, "exhaustive scan over " + count.str() +
                                  " subspaces exceeds budget " + std::to_string(ctx.budget));
}

/// Deterministic parallel max-with-first-witness over [0, total): chunks are
/// reduced in range order regardless of completion order, so the result is
/// identical to a serial ascending scan.
template <typename EvalFn>
std::pair<int, uint64_t> scan_max(uint64_t total, int threads, EvalFn&& eval) {
  int n_chunks = std::max(1, std::min<int>(threads, static_cast<int>(std::min<uint64_t>(total, 256))));
  std::vector<std::pair<int, uint64_t>> best(static_cast<size_t>(n_chunks), {-1, 0});
  auto run_chunk = [&](int c) {
    uint64_t lo = total * static_cast<uint64_t>(c) / n_chunks;
    uint64_t hi = total * static_cast<uint64_t>(c + 1) / n_chunks;
    int best_v = -1;
    uint64_t best_pos = 0;
    for (uint64_t pos = lo; pos < hi; ++pos) {
      int v = eval(pos);
      if (v > best_v) {
        best_v = v;
        best_pos = pos;
      }
    }
    best[static_cast<size_t>(c)] = {best_v, best_pos};
  };
  if (n_chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_chunks));
    for (int c = 0; c < n_chunks; ++c) pool.emplace_back(run_chunk, c);
    for (auto& th : pool) th.join();
  }
  std::pair<int, uint64_t> out{-1, 0};
  for (const auto& b : best)
    if (b.first > out.first) out = b;
  return out;
}

template <typename StatFn>
MeasureResult measure_impl(const std::vector<Subspace>& members, int s, const VerifyMode& mode,
                           const ExecContext& ctx, StatFn&& stat) {
  const FamilyShape shape = family_shape(members);
  if (s < 1 || s > shape.m) fail(Err::RankOutOfRange, "witness rank out of range");
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    check_budget(shape, s, ctx);
    GrassmannIterator it(shape.field, shape.m, s);
    auto [best, pos] = scan_max(it.size(), ctx.threads,
                                [&](uint64_t p) { return stat(it.at(p)); });
    return {best, it.at(pos), mode};
  }
  std::mt19937_64 rng(mode.seed);
  int best = -1;
  std::optional<Subspace> witness;
  for (uint64_t i = 0; i < mode.samples; ++i) {
    Subspace w = sample_subspace(shape.field, shape.m, s, rng);
    int v = stat(w);
    if (v > best) {
      best = v;
      witness = std::move(w);
    }
  }
  if (!witness) fail(Err::ParameterOutOfRange, "sampled mode needs at least one sample");
  return {best, *witness, mode};
}

}  // namespace

int count_meeting(const std::vector<Subspace>& members, const Subspace& w) {
  int count = 0;
  for (const auto& h : members)
    if (intersect(h, w).rank() > 0) ++count;
  return count;
}

int sum_intersection_ranks(const std::vector<Subspace>& members, const Subspace& w) {
  int sum = 0;
  for (const auto& h : members) sum += intersect(h, w).rank();
  return sum;
}

MeasureResult measure_weak(const std::vector<Subspace>& members, int s, const VerifyMode& mode,
                           const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  if (shape.r + s == shape.m) {
    // Meet detection through the Pluecker pairing; member vectors amortized.
    std::vector<PlueckerVector> plk;
    plk.reserve(members.size());
    for (const auto& h : members) plk.push_back(pluecker(h));
    return measure_impl(members, s, mode, ctx, [&](const Subspace& w) {
      PlueckerVector wstar = dual_pluecker(w);
      int count = 0;
      for (const auto& hv : plk)
        if (pairing(wstar, hv) == 0) ++count;
      return count;
    });
  }
  return measure_impl(members, s, mode, ctx,
                      [&](const Subspace& w) { return count_meeting(members, w); });
}

MeasureResult measure_strong(const std::vector<Subspace>& members, int s, const VerifyMode& mode,
                             const ExecContext& ctx) {
  return measure_impl(members, s, mode, ctx,
                      [&](const Subspace& w) { return sum_intersection_ranks(members, w); });
}

std::optional<Subspace> find_blocker_exhaustive(const std::vector<Subspace>& members, int codim,
                                                const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  if (codim < 1 || codim >= shape.m) fail(Err::ParameterOutOfRange, "blocker co-dimension out of range");
  const int w_rank = shape.m - codim;
  check_budget(shape, w_rank, ctx);
  GrassmannIterator it(shape.field, shape.m, w_rank);
  if (codim == shape.r) {
    // Pairing route: W blocks iff <W*|H_i> = 0 for every member.
    std::vector<PlueckerVector> plk;
    plk.reserve(members.size());
    for (const auto& h : members) plk.push_back(pluecker(h));
    for (uint64_t pos = 0; pos < it.size(); ++pos) {
      Subspace w = it.at(pos);
      PlueckerVector wstar = dual_pluecker(w);
      bool blocks = true;
      for (const auto& hv : plk)
        if (pairing(wstar, hv) != 0) {
          blocks = false;
          break;
        }
      if (blocks) return w;
    }
    return std::nullopt;
  }
  for (uint64_t pos = 0; pos < it.size(); ++pos) {
    Subspace w = it.at(pos);
    bool blocks = true;
    for (const auto& h : members)
      if (intersect(h, w).rank() == 0) {
        blocks = false;
        break;
      }
    if (blocks) return w;
  }
  return std::nullopt;
}

namespace {

long long greedy_bound(int d, int k) {
  long long sum = 0;
  for (int i = 0; i <= k; ++i) sum += (d - k + i) / (i + 1);
  return sum;
}

std::optional<Subspace> greedy_rec(const std::vector<Subspace>& members, const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  const int m = shape.m;
  const int r = shape.r;
  const int d = m - 1;
  const int k = r - 1;
  if (static_cast<long long>(members.size()) > greedy_bound(d, k))
    fail(Err::HypothesisViolated,
         "member count " + std::to_string(members.size()) + " exceeds the induction bound " +
             std::to_string(greedy_bound(d, k)));

  if (r == 1) {
    // The points span at most a hyperplane; return one through their span.
    Subspace span = Subspace::zero(shape.field, m);
    for (const auto& h : members) span = join(span, h);
    if (span.rank() >= m) fail(Err::Internal, "points span the whole space within the bound");
    Subspace normal = orthogonal_complement(span);
    Matrix first(shape.field, 1, m);
    for (int j = 0; j < m; ++j) first.at(0, j) = normal.basis().at(0, j);
    return orthogonal_complement(Subspace::from_rows(first));
  }

  if (r == 2) {
    // Transversal base case, found exhaustively.
    try {
      return find_blocker_exhaustive(members, 2, ctx);
    } catch (const Error& e) {
      if (e.code() == Err::BudgetExceeded)
        fail(Err::BaseCaseBudgetExceeded, "transversal base case exceeds budget");
      throw;
    }
  }

  // Put the first floor(d/(k+1)) members into a hyperplane Pi, take
  // rank-(r-1) traces of the rest, recurse inside Pi.
  const size_t c = static_cast<size_t>(d / (k + 1));
  Subspace span = Subspace::zero(shape.field, m);
  for (size_t i = 0; i < c && i < members.size(); ++i) span = join(span, members[i]);
  if (span.rank() >= m) fail(Err::Internal, "leading members span the whole space");
  Subspace normal = orthogonal_complement(span);
  Matrix first(shape.field, 1, m);
  for (int j = 0; j < m; ++j) first.at(0, j) = normal.basis().at(0, j);
  Subspace pi = orthogonal_complement(Subspace::from_rows(first));

  std::vector<Subspace> traces;
  for (size_t i = c; i < members.size(); ++i) {
    Subspace trace = intersect(pi, members[i]);
    if (trace.rank() < r - 1) fail(Err::Internal, "hyperplane trace too small");
    if (trace.rank() > r - 1) {
      Matrix rows(shape.field, r - 1, m);
      for (int a = 0; a < r - 1; ++a)
        for (int j = 0; j < m; ++j) rows.at(a, j) = trace.basis().at(a, j);
      trace = Subspace::from_rows(rows);
    }
    traces.push_back(std::move(trace));
  }
  if (traces.empty()) {
    // All members inside Pi: pick a trace of the first member to recurse on.
    Subspace trace = intersect(pi, members.front());
    Matrix rows(shape.field, r - 1, m);
    for (int a = 0; a < r - 1; ++a)
      for (int j = 0; j < m; ++j) rows.at(a, j) = trace.basis().at(a, j);
    traces.push_back(Subspace::from_rows(rows));
  }

  // Express the traces in Pi-coordinates.
  std::vector<Subspace> sub_members;
  for (const auto& l : traces) {
    Matrix rows(shape.field, l.rank(), m - 1);
    for (int a = 0; a < l.rank(); ++a) {
      std::vector<uint32_t> x = pi.coordinates_of(l.basis().row(a));
      for (int j = 0; j < m - 1; ++j) rows.at(a, j) = x[static_cast<size_t>(j)];
    }
    sub_members.push_back(Subspace::from_rows(rows));
  }
  std::optional<Subspace> inner = greedy_rec(sub_members, ctx);
  if (!inner) return std::nullopt;

  // Map the blocker back through Pi's basis.
  Matrix rows(shape.field, inner->rank(), m);
  for (int a = 0; a < inner->rank(); ++a) {
    std::vector<uint32_t> v = mat_vec_rows(pi.basis(), inner->basis().row(a));
    for (int j = 0; j < m; ++j) rows.at(a, j) = v[static_cast<size_t>(j)];
  }
  return Subspace::from_rows(rows);
}

}  // namespace

std::optional<Subspace> find_blocker_greedy(const std::vector<Subspace>& members,
                                            const ExecContext& ctx) {
  std::optional<Subspace> w = greedy_rec(members, ctx);
  if (w) {
    const FamilyShape shape = family_shape(members);
    if (w->rank() != shape.m - shape.r) fail(Err::Internal, "greedy blocker has wrong rank");
    for (const auto& h : members)
      if (intersect(h, *w).rank() == 0) fail(Err::Internal, "greedy blocker misses a member");
  }
  return w;
}

GeneratorVerdict is_generator_set(const std::vector<Subspace>& members, int k,
                                  const VerifyMode& mode, const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  if (shape.r != k + 1) fail(Err::ShapeMismatch, "generator test needs members of rank k+1");
  if (k < 1 || k >= shape.m) fail(Err::ParameterOutOfRange, "k out of range");
  const int pi_rank = shape.m - k;
  auto spanned = [&](const Subspace& pi) {
    Subspace gen = Subspace::zero(shape.field, shape.m);
    for (const auto& h : members) {
      gen = join(gen, intersect(pi, h));
      if (gen.rank() == pi_rank) return true;
    }
    return gen.rank() == pi_rank;
  };
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    check_budget(shape, pi_rank, ctx);
    GrassmannIterator it(shape.field, shape.m, pi_rank);
    for (uint64_t pos = 0; pos < it.size(); ++pos) {
      Subspace pi = it.at(pos);
      if (!spanned(pi)) return {false, pi, mode};
    }
    return {true, std::nullopt, mode};
  }
  std::mt19937_64 rng(mode.seed);
  for (uint64_t i = 0; i < mode.samples; ++i) {
    Subspace pi = sample_subspace(shape.field, shape.m, pi_rank, rng);
    if (!spanned(pi)) return {false, pi, mode};
  }
  return {true, std::nullopt, mode};
}

HpVerdict hp_check(const std::vector<Subspace>& members, const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  if (members.size() <= shape.field->q()) {
    std::optional<Subspace> blocker = find_blocker_exhaustive(members, shape.r, ctx);
    return {!blocker.has_value(), std::move(blocker), false};
  }
  GeneratorVerdict g = is_generator_set(members, shape.r - 1, VerifyMode::exhaustive(), ctx);
  return {g.is_generator, std::nullopt, true};
}

std::vector<Subspace> dualize(const std::vector<Subspace>& members) {
  std::vector<Subspace> out;
  out.reserve(members.size());
  for (const auto& h : members) out.push_back(orthogonal_complement(h));
  return out;
}

long long generator_set_lower_bound(int d, int k, std::optional<BigInt> q) {
  if (k < 0 || k >= d) fail(Err::ParameterOutOfRange, "lower bound needs 0 <= k < d");
  long long sum = 0;
  for (int i = 0; i <= k; ++i) sum += (d - k + i) / (i + 1);
  if (q && *q < BigInt(sum)) return q->convert_to<long long>() + 1;
  return sum + 1;
}

long long closed_field_lower_bound(int d, int k) {
  if (k < 0 || k >= d) fail(Err::ParameterOutOfRange, "lower bound needs 0 <= k < d");
  return static_cast<long long>(k + 1) * (d - k) + 1;
}

StrongPolyCrosscheck crosscheck_strong_poly(const Design& design, const Subspace& w) {
  const CoefficientScheme& scheme = design.scheme();
  if (!scheme.polynomial())
    fail(Err::NonPolynomialScheme, "polynomial cross-check needs h(i,n) = 0 below the diagonal");
  if (w.rank() != scheme.s()) fail(Err::ShapeMismatch, "witness rank must equal s");
  require_same_field(*w.field(), *scheme.field());
  const Field& f = *scheme.field();

  Subspace wperp = orthogonal_complement(w);
  int rank_sum = 0;
  for (const auto& mem : design.members())
    rank_sum += intersect(orthogonal_complement(mem.h), wperp).rank();

  Matrix reduced = reduce_covector_basis(wperp.basis());
  PolyMatrix m = build_matrix(reduced, scheme);
  Poly det = polymat_det(m);

  StrongPolyCrosscheck out{};
  out.rank_sum = rank_sum;
  out.degree_bound = scheme.s() * (scheme.d() - scheme.s() + 1);
  if (det.is_zero()) {
    out.det_zero = true;
    return out;
  }
  out.det_degree = *det.degree();
  int mult_sum = 0;
  for (uint64_t t = 0; t < f.q(); ++t)
    mult_sum += root_multiplicity(det, static_cast<uint32_t>(t));
  out.multiplicity_sum = mult_sum;
  if (!(out.rank_sum <= out.multiplicity_sum && out.multiplicity_sum <= out.det_degree &&
        out.det_degree <= out.degree_bound))
    fail(Err::Internal, "polynomial cross-check chain violated");
  return out;
}

DesignReport verify_design(const std::vector<Subspace>& members, bool check_weak,
                           bool check_strong, bool check_hp, const VerifyMode& mode,
                           const ExecContext& ctx) {
  const FamilyShape shape = family_shape(members);
  DesignReport rep;
  rep.n_members = static_cast<int>(members.size());
  rep.s = shape.m - shape.r;
  rep.mode = mode;
  if (check_weak) rep.weak = measure_weak(members, rep.s, mode, ctx);
  if (check_strong) rep.strong = measure_strong(members, rep.s, mode, ctx);
  if (check_hp) rep.hp = hp_check(members, ctx);
  return rep;
}

}  // namespace hpd
