#include <doctest.h>

#include <algorithm>
#include <random>

#include "designs.hpp"

using namespace hpd;

namespace {

Subspace coord_span(const FieldPtr& f, int m, const std::vector<int>& axes) {
  Matrix mat(f, static_cast<int>(axes.size()), m);
  for (size_t i = 0; i < axes.size(); ++i) mat.at(static_cast<int>(i), axes[i]) = 1;
  return Subspace::from_rows(mat);
}

Design secant5() {
  auto f = Field::make(5, 1);
  return Design::build(CoefficientScheme(f, Family::Secant, 2, 2, 2));
}

Design tangent7() {
  auto f = Field::make(7, 1);
  return Design::build(CoefficientScheme(f, Family::Tangent, 2, 2));
}

}  // namespace

TEST_CASE("verify mode parsing") {
  CHECK(VerifyMode::parse("exhaustive", 9).exhaustive_kind());
  VerifyMode vm = VerifyMode::parse("sampled:100:7", 0);
  CHECK(vm.samples == 100);
  CHECK(vm.seed == 7);
  VerifyMode def = VerifyMode::parse("sampled:50", 3);
  CHECK(def.seed == 3);
  CHECK_THROWS_AS(VerifyMode::parse("smapled:1", 0), Error);
  CHECK(VerifyMode::sampled(10, 2).to_string() == "sampled:10:2");
}

TEST_CASE("weak measurement on the GF(5) secant design") {
  Design d = secant5();
  ExecContext ctx;
  MeasureResult weak = measure_weak(d.member_subspaces(), 2, VerifyMode::exhaustive(), ctx);
  CHECK(weak.value == 4);
  // Witness re-verification.
  CHECK(count_meeting(d.member_subspaces(), weak.witness) == 4);
}

TEST_CASE("strong measurement and the sandwich") {
  Design d = secant5();
  ExecContext ctx;
  auto members = d.member_subspaces();
  MeasureResult weak = measure_weak(members, 2, VerifyMode::exhaustive(), ctx);
  MeasureResult strong = measure_strong(members, 2, VerifyMode::exhaustive(), ctx);
  CHECK(strong.value <= 5);  // r*s + C(r,2)
  CHECK(weak.value <= strong.value);
  CHECK(strong.value <= 2 * weak.value);  // min(r,s) = 2
  CHECK(sum_intersection_ranks(members, strong.witness) == strong.value);
}

TEST_CASE("degenerate member families") {
  auto f = Field::make(5, 1);
  ExecContext ctx;
  Design d = secant5();
  std::vector<Subspace> one{d.members()[1].h};
  MeasureResult weak = measure_weak(one, 2, VerifyMode::exhaustive(), ctx);
  CHECK(weak.value == 1);

  // Three planes through the common line e0 are all met by any W containing it.
  std::vector<Subspace> pencil{coord_span(f, 4, {0, 1}), coord_span(f, 4, {0, 2}),
                               coord_span(f, 4, {0, 3})};
  MeasureResult total = measure_weak(pencil, 2, VerifyMode::exhaustive(), ctx);
  CHECK(total.value == 3);
}

TEST_CASE("sampled measurements never exceed exhaustive ones") {
  Design d = secant5();
  ExecContext ctx;
  auto members = d.member_subspaces();
  MeasureResult exact_w = measure_weak(members, 2, VerifyMode::exhaustive(), ctx);
  MeasureResult exact_s = measure_strong(members, 2, VerifyMode::exhaustive(), ctx);
  for (uint64_t seed : {1, 2, 3}) {
    CHECK(measure_weak(members, 2, VerifyMode::sampled(150, seed), ctx).value <= exact_w.value);
    CHECK(measure_strong(members, 2, VerifyMode::sampled(150, seed), ctx).value <= exact_s.value);
  }
}

TEST_CASE("budget enforcement") {
  Design d = secant5();
  ExecContext tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(measure_weak(d.member_subspaces(), 2, VerifyMode::exhaustive(), tiny), Error);
  try {
    measure_weak(d.member_subspaces(), 2, VerifyMode::exhaustive(), tiny);
  } catch (const Error& e) {
    CHECK(e.code() == Err::BudgetExceeded);
  }
}

TEST_CASE("parallel scans match the serial result") {
  Design d = tangent7();
  auto members = d.member_subspaces();
  ExecContext serial;
  serial.threads = 1;
  ExecContext parallel;
  parallel.threads = 4;
  MeasureResult a = measure_weak(members, 2, VerifyMode::exhaustive(), serial);
  MeasureResult b = measure_weak(members, 2, VerifyMode::exhaustive(), parallel);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  MeasureResult c = measure_strong(members, 2, VerifyMode::exhaustive(), serial);
  MeasureResult e = measure_strong(members, 2, VerifyMode::exhaustive(), parallel);
  CHECK(c.value == e.value);
  CHECK(c.witness == e.witness);
}

TEST_CASE("exhaustive blocker search") {
  ExecContext ctx;
  Design d = secant5();
  CHECK(!find_blocker_exhaustive(d.member_subspaces(), 2, ctx).has_value());

  // Planes through a common line are blocked by any W containing that line.
  auto f = Field::make(5, 1);
  std::vector<Subspace> pencil{coord_span(f, 4, {0, 1}), coord_span(f, 4, {0, 2}),
                               coord_span(f, 4, {0, 3})};
  auto blocker = find_blocker_exhaustive(pencil, 2, ctx);
  REQUIRE(blocker.has_value());
  for (const auto& h : pencil) CHECK(intersect(h, *blocker).rank() > 0);

  // Two disjoint lines in PG(3,2) admit a transversal.
  auto f2 = Field::make(2, 1);
  std::vector<Subspace> lines{coord_span(f2, 4, {0, 1}), coord_span(f2, 4, {2, 3})};
  auto trans = find_blocker_exhaustive(lines, 2, ctx);
  REQUIRE(trans.has_value());
  CHECK(intersect(lines[0], *trans).rank() > 0);
  CHECK(intersect(lines[1], *trans).rank() > 0);
}

TEST_CASE("pairing route and rank route agree on blocker verdicts") {
  // Brute force over all 35 candidate lines for several 3-line families.
  auto f = Field::make(2, 1);
  ExecContext ctx;
  GrassmannIterator lines(f, 4, 2);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Subspace> members;
    for (int i = 0; i < 3; ++i) members.push_back(sample_subspace(f, 4, 2, rng));
    auto fast = find_blocker_exhaustive(members, 2, ctx);
    std::optional<Subspace> slow;
    for (uint64_t pos = 0; pos < lines.size() && !slow; ++pos) {
      Subspace w = lines.at(pos);
      bool all = true;
      for (const auto& h : members)
        if (intersect(h, w).rank() == 0) {
          all = false;
          break;
        }
      if (all) slow = w;
    }
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);
  }
}

TEST_CASE("greedy blocker on line families") {
  ExecContext ctx;
  for (uint64_t qv : {2, 3, 5}) {
    auto f = Field::make(qv, 1);
    std::mt19937_64 rng(qv);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Subspace> lines;
      for (int i = 0; i < 3; ++i) lines.push_back(sample_subspace(f, 4, 2, rng));
      auto w = find_blocker_greedy(lines, ctx);
      REQUIRE(w.has_value());
      CHECK(w->rank() == 2);
      for (const auto& h : lines) CHECK(intersect(h, *w).rank() > 0);
    }
  }
}

TEST_CASE("greedy blocker recursion on planes in PG(5,2)") {
  // Bound for k = 2, d = 5: floor(5/3) + floor(4/2) + floor(3/1) = 6.
  auto f = Field::make(2, 1);
  ExecContext ctx;
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Subspace> planes;
    for (int i = 0; i < 6; ++i) planes.push_back(sample_subspace(f, 6, 3, rng));
    auto w = find_blocker_greedy(planes, ctx);
    REQUIRE(w.has_value());
    CHECK(w->rank() == 3);
    for (const auto& h : planes) CHECK(intersect(h, *w).rank() > 0);
  }
}

TEST_CASE("greedy blocker bound enforcement") {
  auto f = Field::make(3, 1);
  std::mt19937_64 rng(41);
  std::vector<Subspace> four;
  for (int i = 0; i < 4; ++i) four.push_back(sample_subspace(f, 4, 2, rng));
  ExecContext ctx;
  try {
    find_blocker_greedy(four, ctx);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Err::HypothesisViolated);
  }

  // Single member: a blocker through one of its points.
  std::vector<Subspace> one{coord_span(f, 4, {0, 1})};
  auto w = find_blocker_greedy(one, ctx);
  REQUIRE(w.has_value());
  CHECK(intersect(one[0], *w).rank() > 0);
}

TEST_CASE("generator-set verdicts") {
  ExecContext ctx;
  Design d = secant5();
  GeneratorVerdict good = is_generator_set(d.member_subspaces(), 1, VerifyMode::exhaustive(), ctx);
  CHECK(good.is_generator);

  auto f = Field::make(3, 1);
  std::vector<Subspace> two{coord_span(f, 4, {0, 1}), coord_span(f, 4, {2, 3})};
  GeneratorVerdict bad = is_generator_set(two, 1, VerifyMode::exhaustive(), ctx);
  CHECK(!bad.is_generator);
  REQUIRE(bad.failing.has_value());

  // Members inside a common hyperplane can span no hyperplane but their own.
  std::vector<Subspace> flat{coord_span(f, 4, {0, 1}), coord_span(f, 4, {1, 2})};
  CHECK(!is_generator_set(flat, 1, VerifyMode::exhaustive(), ctx).is_generator);
}

TEST_CASE("hp verdicts") {
  ExecContext ctx;
  Design d = secant5();
  HpVerdict hp = hp_check(d.member_subspaces(), ctx);
  CHECK(hp.is_generator);
  CHECK(!hp.blocker.has_value());
  CHECK(!hp.equivalence_hypothesis_failed);

  auto f2 = Field::make(2, 1);
  std::vector<Subspace> two{coord_span(f2, 4, {0, 1}), coord_span(f2, 4, {2, 3})};
  HpVerdict not_hp = hp_check(two, ctx);
  CHECK(!not_hp.is_generator);
  REQUIRE(not_hp.blocker.has_value());

  // Three members over GF(2) exceed |F|, so the fallback path runs.
  std::vector<Subspace> three{coord_span(f2, 4, {0, 1}), coord_span(f2, 4, {2, 3}),
                              coord_span(f2, 4, {1, 2})};
  HpVerdict fallback = hp_check(three, ctx);
  CHECK(fallback.equivalence_hypothesis_failed);

  // Any five members of the GF(7) tangent design form an HP family
  // (a weak (2,4) design with 4 < q gives HP subsets of size 5).
  Design t7 = tangent7();
  auto all7 = t7.member_subspaces();
  std::vector<Subspace> five(all7.begin(), all7.begin() + 5);
  CHECK(hp_check(five, ctx).is_generator);
}

TEST_CASE("equivalence of generator-set and blocker verdicts on tiny fields") {
  ExecContext ctx;
  for (uint64_t qv : {2, 3}) {
    auto f = Field::make(qv, 1);
    std::mt19937_64 rng(qv + 100);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Subspace> members;
      for (uint64_t i = 0; i < qv; ++i) members.push_back(sample_subspace(f, 4, 2, rng));
      bool no_blocker = !find_blocker_exhaustive(members, 2, ctx).has_value();
      bool generator =
          is_generator_set(members, 1, VerifyMode::exhaustive(), ctx).is_generator;
      CHECK(no_blocker == generator);
    }
  }
}

TEST_CASE("duality preserves measured parameters") {
  ExecContext ctx;
  Design d = secant5();
  auto members = d.member_subspaces();
  auto duals = dualize(members);
  // Involution.
  auto back = dualize(duals);
  for (size_t i = 0; i < members.size(); ++i) CHECK(back[i] == members[i]);

  MeasureResult w = measure_weak(members, 2, VerifyMode::exhaustive(), ctx);
  MeasureResult dw = measure_weak(duals, 2, VerifyMode::exhaustive(), ctx);
  CHECK(w.value == dw.value);
  MeasureResult s = measure_strong(members, 2, VerifyMode::exhaustive(), ctx);
  MeasureResult ds = measure_strong(duals, 2, VerifyMode::exhaustive(), ctx);
  CHECK(s.value == ds.value);
}

TEST_CASE("lower bounds") {
  CHECK(generator_set_lower_bound(4, 1, BigInt(1000)) == 6);
  CHECK(generator_set_lower_bound(3, 1, BigInt(5)) == 4);
  CHECK(generator_set_lower_bound(3, 1, std::nullopt) == 4);  // sum = 3
  CHECK(closed_field_lower_bound(3, 1) == 5);
  CHECK_THROWS_AS(generator_set_lower_bound(3, 3, BigInt(5)), Error);

  // k = 1 cross-check against the two-term line form floor(d/2) + d - 1.
  for (int d = 2; d <= 12; ++d)
    CHECK(generator_set_lower_bound(d, 1, std::nullopt) == d / 2 + d - 1 + 1);
}

TEST_CASE("polynomial cross-check chain") {
  Design d = tangent7();
  std::mt19937_64 rng(53);
  auto f = d.scheme().field();
  for (int trial = 0; trial < 30; ++trial) {
    Subspace w = sample_subspace(f, 4, 2, rng);
    StrongPolyCrosscheck chain = crosscheck_strong_poly(d, w);
    CHECK(!chain.det_zero);
    CHECK(chain.rank_sum <= chain.multiplicity_sum);
    CHECK(chain.multiplicity_sum <= chain.det_degree);
    CHECK(chain.det_degree <= chain.degree_bound);
    CHECK(chain.degree_bound == 4);
  }

  // W = H(0): the member meets W in full rank, so t = 0 contributes >= r.
  StrongPolyCrosscheck aligned = crosscheck_strong_poly(d, d.members()[0].h);
  CHECK(aligned.rank_sum >= 2);
  CHECK(aligned.multiplicity_sum >= 2);

  // Secant schemes are not polynomial.
  Design sec = secant5();
  auto f5 = sec.scheme().field();
  std::mt19937_64 rng5(3);
  try {
    crosscheck_strong_poly(sec, sample_subspace(f5, 4, 2, rng5));
    FAIL("expected NonPolynomialScheme");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NonPolynomialScheme);
  }
}

TEST_CASE("s = 1 cross-check uses a single-row reduction") {
  auto f = Field::make(11, 1);
  Design d = Design::build(CoefficientScheme(f, Family::Tangent, 3, 1));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace w = sample_subspace(f, 4, 1, rng);
    StrongPolyCrosscheck chain = crosscheck_strong_poly(d, w);
    CHECK(chain.degree_bound == 3);  // s (d - s + 1) = 1 * 3
    if (!chain.det_zero) CHECK(chain.det_degree <= 3);
  }
}

TEST_CASE("verify_design aggregates the requested checks") {
  ExecContext ctx;
  Design d = secant5();
  DesignReport rep =
      verify_design(d.member_subspaces(), true, true, true, VerifyMode::exhaustive(), ctx);
  CHECK(rep.n_members == 5);
  CHECK(rep.s == 2);
  REQUIRE(rep.weak.has_value());
  REQUIRE(rep.strong.has_value());
  REQUIRE(rep.hp.has_value());
  CHECK(rep.weak->value == 4);
  CHECK(rep.hp->is_generator);
}
