#include <doctest.h>

#include <json.hpp>

#include "io_json.hpp"

using namespace hpd;

namespace {

Design secant5() {
  auto f = Field::make(5, 1);
  return Design::build(CoefficientScheme(f, Family::Secant, 2, 2, 2));
}

}  // namespace

TEST_CASE("design JSON round trip") {
  Design d = secant5();
  std::string text = design_to_json(d);
  DesignFile file = design_file_from_json(text);
  CHECK(file.m == 4);
  CHECK(file.r == 2);
  CHECK(file.family == Family::Secant);
  CHECK(file.omega == 2);
  REQUIRE(file.members.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(file.members[i] == d.members()[i].h);
    REQUIRE(file.member_plk[i].has_value());
    CHECK(*file.member_plk[i] == d.members()[i].plk);
  }
  // Serialization is stable.
  CHECK(design_file_to_json(file) == text);
}

TEST_CASE("bare member lists parse without scheme metadata") {
  std::string text = R"({
    "field": "2", "m": 4, "r": 2,
    "members": [
      {"basis": [[1,0,0,0],[0,1,0,0]]},
      {"basis": [[0,0,1,0],[0,0,0,1]]}
    ]
  })";
  DesignFile file = design_file_from_json(text);
  CHECK(!file.family.has_value());
  CHECK(file.members.size() == 2);
  CHECK(file.members[0].rank() == 2);
}

TEST_CASE("malformed design JSON is a parse error") {
  CHECK_THROWS_AS(design_file_from_json("{"), Error);
  CHECK_THROWS_AS(design_file_from_json(R"({"field":"2","m":4,"r":2,"members":[]})"), Error);
  CHECK_THROWS_AS(
      design_file_from_json(
          R"({"field":"2","m":4,"r":2,"members":[{"basis":[[9,0,0,0],[0,1,0,0]]}]})"),
      Error);
}

TEST_CASE("report JSON and recheck") {
  Design d = secant5();
  ExecContext ctx;
  DesignReport rep =
      verify_design(d.member_subspaces(), true, true, true, VerifyMode::exhaustive(), ctx);
  DesignFile file = design_file_from_design(d);
  std::string text = report_to_json(rep, file);

  ParsedReport parsed = report_from_json(text);
  CHECK(parsed.report.n_members == 5);
  CHECK(parsed.report.weak->value == 4);
  CHECK(parsed.report.hp->is_generator);
  CHECK(recheck_report(parsed));

  // Tampering with the reported value breaks the recheck.
  nlohmann::json tampered = nlohmann::json::parse(text);
  tampered["A_weak"] = 5;
  CHECK(!recheck_report(report_from_json(tampered.dump())));
}

TEST_CASE("bounds JSON matches the formulas") {
  nlohmann::json j = nlohmann::json::parse(bounds_to_json(4, 1, BigInt(9)));
  CHECK(j["finite_bound"] == 6);
  CHECK(j["closed_field_bound"] == 7);
  nlohmann::json inf = nlohmann::json::parse(bounds_to_json(3, 1, std::nullopt));
  CHECK(inf["finite_bound"] == 4);
  CHECK(inf["closed_field_bound"] == 5);
}

TEST_CASE("conditions JSON") {
  auto f = Field::make(2, 2);
  nlohmann::json j = nlohmann::json::parse(conditions_to_json(2, 3, *f));
  CHECK(j["char_zero"] == false);
  CHECK(j["char_gt_r_plus_s"] == false);
  CHECK(j["size_gt_binom_bound"] == false);
  CHECK(j["size_gt_char_power_bound"] == false);
  CHECK(j["any"] == false);

  auto f7 = Field::make(7, 1);
  nlohmann::json j7 = nlohmann::json::parse(conditions_to_json(2, 2, *f7));
  CHECK(j7["char_gt_r_plus_s"] == true);
  CHECK(j7["any"] == true);
}

TEST_CASE("omega exploration JSON") {
  auto f = Field::make(5, 1);
  nlohmann::json j = nlohmann::json::parse(explore_omega_to_json(f, 2, 2, Family::Secant));
  // Orders: 1 -> 1, 2 -> 4, 3 -> 4, 4 -> 2; viable omegas have order >= 4.
  CHECK(j["viable_omegas"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("field info JSON") {
  auto f = Field::make(2, 2);
  nlohmann::json j = nlohmann::json::parse(field_info_to_json(*f));
  CHECK(j["p"] == 2);
  CHECK(j["h"] == 2);
  CHECK(j["q"] == 4);
  CHECK(j["modulus"] == nlohmann::json::array({1, 1, 1}));
}
