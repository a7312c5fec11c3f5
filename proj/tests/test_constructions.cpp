#include <doctest.h>

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>

#include "constructions.hpp"

using namespace hpd;

TEST_CASE("moment points") {
  auto f = Field::make(5, 1);
  CHECK(moment_point(*f, 0, 3) == std::vector<uint32_t>{1, 0, 0, 0});
  CHECK(moment_point(*f, 2, 3) == std::vector<uint32_t>{1, 2, 4, 3});
  CHECK(moment_point(*f, 1, 5) == std::vector<uint32_t>(6, 1));
}

TEST_CASE("tangent coefficients are index Vandermondes") {
  auto f = Field::make(7, 1);
  CoefficientScheme tangent(f, Family::Tangent, 2, 2);
  // r = 2: coefficient of (i,j) is det[[1,1],[i,j]] = j - i.
  IndexTuple t{0, 1};
  do {
    CHECK(scheme_coeff(tangent, t) == f->from_int(t[1] - t[0]));
  } while (next_tuple(t, 4));

  CoefficientScheme tangent3(f, Family::Tangent, 3, 2);
  // V(0,1,3) = (1-0)(3-0)(3-1) = 6.
  CHECK(scheme_coeff(tangent3, IndexTuple{0, 1, 3}) == 6);
}

TEST_CASE("secant coefficients") {
  auto f = Field::make(5, 1);
  CoefficientScheme secant(f, Family::Secant, 2, 2, 2);
  IndexTuple t{0, 1};
  do {
    uint32_t expect = f->sub(f->pow(2, static_cast<uint64_t>(t[1])),
                             f->pow(2, static_cast<uint64_t>(t[0])));
    CHECK(scheme_coeff(secant, t) == expect);
  } while (next_tuple(t, 4));
}

TEST_CASE("coefficient scans") {
  auto f7 = Field::make(7, 1);
  CHECK(check_coeffs_nonzero(CoefficientScheme(f7, Family::Tangent, 2, 2)).all_nonzero);

  auto f5 = Field::make(5, 1);
  CHECK(check_coeffs_nonzero(CoefficientScheme(f5, Family::Secant, 2, 2, 2)).all_nonzero);

  // omega = 4 has order 2, so omega^0 = omega^2 and tuples with i = j mod 2 vanish.
  CoeffScan bad = check_coeffs_nonzero(CoefficientScheme(f5, Family::Secant, 2, 2, 4));
  CHECK(!bad.all_nonzero);
  REQUIRE(bad.offending.has_value());
  CHECK((*bad.offending)[0] % 2 == (*bad.offending)[1] % 2);
}

TEST_CASE("omega search") {
  auto f5 = Field::make(5, 1);
  CHECK(find_omega(f5, 2, 2, Family::Secant) == 2);
  CHECK(find_omega(f5, 2, 2, Family::Diverted) == 2);
  auto f2 = Field::make(2, 1);
  CHECK(!find_omega(f2, 2, 2, Family::Secant).has_value());
  CHECK(!find_omega(f2, 2, 2, Family::Diverted).has_value());
}

TEST_CASE("generalized Vandermonde") {
  auto f = Field::make(5, 1);
  uint32_t omega = 3;
  CHECK(generalized_vandermonde(f, {0, 1}, {1, omega}) == f->sub(omega, 1));
  CHECK(generalized_vandermonde(f, {0, 2}, {1, 2}) == 3);  // det[[1,1],[1,4]]
  CHECK(generalized_vandermonde(f, {0}, {4}) == 1);
  CHECK_THROWS_AS(generalized_vandermonde(f, {0, 1}, {1}), Error);
  CHECK_THROWS_AS(generalized_vandermonde(f, {1, 0}, {1, 2}), Error);

  // With consecutive exponents it is the classical product formula.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<int> exps(static_cast<size_t>(n));
    std::iota(exps.begin(), exps.end(), 0);
    std::vector<uint32_t> elems(static_cast<size_t>(n));
    for (auto& e : elems) e = static_cast<uint32_t>(rng() % 5);
    uint32_t prod = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        prod = f->mul(prod, f->sub(elems[static_cast<size_t>(j)], elems[static_cast<size_t>(i)]));
    CHECK(generalized_vandermonde(f, exps, elems) == prod);
  }
}

TEST_CASE("sigma bounds") {
  SigmaBounds sb = sigma_bounds({0, 1}, {0, 1}, 5, 3);  // d-r = 2, r-1 = 2
  CHECK(sb.sigma_ident == 1);
  CHECK(sb.sigma_opp == 0);
  CHECK(sb.spread_bound_times_two == 2 * 2 * 2);

  SigmaBounds single = sigma_bounds({1}, {2}, 6, 3);
  CHECK(single.sigma_ident == single.sigma_opp);

  CHECK_THROWS_AS(sigma_bounds({1, 0}, {0, 1}, 5, 3), Error);
  CHECK_THROWS_AS(sigma_bounds({0, 5}, {0, 1}, 5, 3), Error);  // j exceeds r-1
}

TEST_CASE("sigma extremes against brute force over S_N") {
  // All strictly increasing (j, b) with N <= 3 in small ranges.
  for (int rm1 = 1; rm1 <= 3; ++rm1)
    for (int dr = 1; dr <= 3; ++dr) {
      const int r = rm1 + 1, d = r + dr;
      std::vector<std::vector<int>> lists;
      for (int mask = 1; mask < (1 << (rm1 + 1)); ++mask) {
        std::vector<int> v;
        for (int x = 0; x <= rm1; ++x)
          if (mask & (1 << x)) v.push_back(x);
        if (v.size() <= 3) lists.push_back(v);
      }
      std::vector<std::vector<int>> blists;
      for (int mask = 1; mask < (1 << (dr + 1)); ++mask) {
        std::vector<int> v;
        for (int x = 0; x <= dr; ++x)
          if (mask & (1 << x)) v.push_back(x);
        if (v.size() <= 3) blists.push_back(v);
      }
      for (const auto& j : lists)
        for (const auto& b : blists) {
          if (j.size() != b.size()) continue;
          const int n = static_cast<int>(j.size());
          SigmaBounds sb = sigma_bounds(j, b, d, r);
          std::vector<int> perm(static_cast<size_t>(n));
          std::iota(perm.begin(), perm.end(), 0);
          long long mx = LLONG_MIN, mn = LLONG_MAX;
          do {
            long long sum = 0;
            for (int k = 0; k < n; ++k)
              sum += static_cast<long long>(b[static_cast<size_t>(k)]) *
                     j[static_cast<size_t>(perm[static_cast<size_t>(k)])];
            mx = std::max(mx, sum);
            mn = std::min(mn, sum);
          } while (std::next_permutation(perm.begin(), perm.end()));
          CHECK(sb.sigma_ident == mx);
          CHECK(sb.sigma_opp == mn);
          CHECK(2 * (mx - mn) <= sb.spread_bound_times_two);
          CHECK(sb.sigma_ident <= sb.leading_degree_bound);
        }
    }
}

TEST_CASE("existence condition report") {
  auto f7 = Field::make(7, 1);
  ExistenceReport r7 = existence_conditions(2, 2, *f7);
  CHECK(r7.char_gt_m);
  CHECK(!r7.char_zero);

  auto f5 = Field::make(5, 1);
  CHECK(existence_conditions(2, 2, *f5).char_gt_m);  // 5 > 4

  auto f4 = Field::make(2, 2);
  ExistenceReport r4 = existence_conditions(2, 3, *f4);
  CHECK(!r4.char_gt_m);
  CHECK(!r4.size_gt_binom);     // 4 <= C(5,2)*1*2 = 20
  CHECK(!r4.size_gt_char_pow);  // 4 <= 2^2
  CHECK(!r4.char_zero);
}

TEST_CASE("secant design over GF(5)") {
  auto f = Field::make(5, 1);
  Design design = Design::build(CoefficientScheme(f, Family::Secant, 2, 2, 2));
  REQUIRE(design.members().size() == 5);

  // H(1) spans the curve points a(1) and a(2).
  const DesignMember& h1 = design.members()[1];
  Matrix rows(f, 2, 4);
  auto a1 = moment_point(*f, 1, 3), a2 = moment_point(*f, 2, 3);
  for (int j = 0; j < 4; ++j) {
    rows.at(0, j) = a1[static_cast<size_t>(j)];
    rows.at(1, j) = a2[static_cast<size_t>(j)];
  }
  CHECK(h1.h == Subspace::from_rows(rows));
  CHECK(h1.plk.coords() == std::vector<uint32_t>{1, 3, 2, 2, 1, 4});

  // H(0) is the coordinate plane span{e0, e1}.
  const DesignMember& h0 = design.members()[0];
  Matrix e01(f, 2, 4);
  e01.at(0, 0) = 1;
  e01.at(1, 1) = 1;
  CHECK(h0.h == Subspace::from_rows(e01));
}

TEST_CASE("invalid schemes are rejected") {
  auto f3 = Field::make(3, 1);
  CHECK_THROWS_AS(Design::build(CoefficientScheme(f3, Family::Tangent, 2, 2)), Error);
  try {
    Design::build(CoefficientScheme(f3, Family::Tangent, 2, 2));
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidScheme);
  }

  auto f5 = Field::make(5, 1);
  // omega = 4 has order 2 < 4.
  CHECK_THROWS_AS(Design::build(CoefficientScheme(f5, Family::Secant, 2, 2, 4)), Error);
  CHECK_THROWS_AS(CoefficientScheme(f5, Family::Secant, 2, 2), Error);  // missing omega
}

TEST_CASE("closed form matches minors for every member and tuple") {
  struct Case {
    FieldPtr f;
    Family family;
    std::optional<uint32_t> omega;
  };
  std::vector<Case> cases;
  cases.push_back({Field::make(7, 1), Family::Tangent, std::nullopt});
  cases.push_back({Field::make(5, 1), Family::Secant, 2});
  cases.push_back({Field::make(5, 1), Family::Diverted, 2});
  cases.push_back({Field::make(2, 3), Family::Secant, 2});   // extension field, ord(X) = 7
  cases.push_back({Field::make(2, 2), Family::Diverted, 2});  // omega = X in GF(4)

  for (const auto& c : cases) {
    CoefficientScheme scheme(c.f, c.family, 2, 2, c.omega);
    Design design = Design::build(scheme);
    const Field& f = *c.f;
    for (const auto& mem : design.members()) {
      PlueckerVector direct = pluecker(mem.h);
      IndexTuple t{0, 1};
      std::vector<uint32_t> closed;
      do {
        long sum = t[0] + t[1];
        uint32_t te = sum == 1 ? 1 : f.pow(mem.t, static_cast<uint64_t>(sum - 1));
        closed.push_back(f.mul(scheme_coeff(scheme, t), te));
      } while (next_tuple(t, 4));
      CHECK(PlueckerVector::from_coords(c.f, 4, 2, closed) == direct);
      CHECK(mem.plk == direct);
    }
  }
}
