#include "io_json.hpp"

#include <json.hpp>

namespace hpd {

using nlohmann::json;

namespace {

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (int i = 0; i < s.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.ambient(); ++j) row.push_back(s.basis().at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"m", s.ambient()}, {"rank", s.rank()}, {"basis", std::move(rows)}};
}

Subspace subspace_from_json(const json& j, const FieldPtr& field, int m) {
  const auto& rows = j.at("basis");
  Matrix mat(field, static_cast<int>(rows.size()), m);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m) fail(Err::Parse, "basis row length mismatch");
    for (int c = 0; c < m; ++c) {
      uint64_t v = rows[i][static_cast<size_t>(c)].get<uint64_t>();
      if (v >= field->q()) fail(Err::Parse, "element code out of range");
      mat.at(static_cast<int>(i), c) = static_cast<uint32_t>(v);
    }
  }
  return Subspace::from_rows(mat);
}

json pluecker_json(const PlueckerVector& v) {
  json coords = json::object();
  IndexTuple t = tuple_unrank(0, v.m(), v.r());
  uint64_t pos = 0;
  do {
    uint32_t c = v.at(pos);
    if (c != 0) coords[tuple_to_string(t)] = c;
    ++pos;
  } while (next_tuple(t, v.m()));
  return json{{"m", v.m()}, {"r", v.r()}, {"coords", std::move(coords)}};
}

IndexTuple tuple_from_string(const std::string& s) {
  IndexTuple t;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) fail(Err::Parse, "bad tuple '" + s + "'");
    t.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return t;
}

PlueckerVector pluecker_from_json(const json& j, const FieldPtr& field) {
  int m = j.at("m").get<int>();
  int r = j.at("r").get<int>();
  std::vector<uint32_t> coords(binomial(m, r), 0);
  for (const auto& [key, val] : j.at("coords").items()) {
    IndexTuple t = tuple_from_string(key);
    if (static_cast<int>(t.size()) != r) fail(Err::Parse, "tuple arity mismatch");
    coords[tuple_rank(t, m)] = val.get<uint32_t>();
  }
  return PlueckerVector::from_coords(field, m, r, std::move(coords));
}

json design_file_json(const DesignFile& f) {
  json members = json::array();
  for (size_t i = 0; i < f.members.size(); ++i) {
    json mem = json::object();
    if (f.member_t[i]) mem["t"] = *f.member_t[i];
    json rows = json::array();
    for (int a = 0; a < f.members[i].rank(); ++a) {
      json row = json::array();
      for (int c = 0; c < f.m; ++c) row.push_back(f.members[i].basis().at(a, c));
      rows.push_back(std::move(row));
    }
    mem["basis"] = std::move(rows);
    if (f.member_plk[i]) mem["pluecker"] = pluecker_json(*f.member_plk[i])["coords"];
    members.push_back(std::move(mem));
  }
  json out{{"field", f.field->spec_string()},
           {"m", f.m},
           {"r", f.r},
           {"s", f.m - f.r},
           {"members", std::move(members)}};
  if (f.family) out["family"] = family_to_string(*f.family);
  if (f.omega) out["omega"] = *f.omega;
  return out;
}

DesignFile design_file_from(const json& j) {
  DesignFile f;
  f.field = Field::parse(j.at("field").get<std::string>());
  f.m = j.at("m").get<int>();
  f.r = j.at("r").get<int>();
  if (f.m < 1 || f.r < 1 || f.r > f.m) fail(Err::Parse, "bad design dimensions");
  if (j.contains("family")) f.family = family_from_string(j.at("family").get<std::string>());
  if (j.contains("omega")) f.omega = j.at("omega").get<uint32_t>();
  for (const auto& mem : j.at("members")) {
    std::optional<uint32_t> t;
    if (mem.contains("t")) t = mem.at("t").get<uint32_t>();
    Subspace s = subspace_from_json(mem, f.field, f.m);
    if (s.rank() != f.r) fail(Err::Parse, "member rank does not match r");
    std::optional<PlueckerVector> plk;
    if (mem.contains("pluecker"))
      plk = pluecker_from_json(json{{"m", f.m}, {"r", f.r}, {"coords", mem.at("pluecker")}},
                               f.field);
    f.member_t.push_back(t);
    f.members.push_back(std::move(s));
    f.member_plk.push_back(std::move(plk));
  }
  if (f.members.empty()) fail(Err::Parse, "design has no members");
  return f;
}

}  // namespace

DesignFile design_file_from_design(const Design& design) {
  DesignFile f;
  f.field = design.scheme().field();
  f.m = design.scheme().m();
  f.r = design.scheme().r();
  f.family = design.scheme().family();
  f.omega = design.scheme().omega();
  for (const auto& mem : design.members()) {
    f.member_t.push_back(mem.t);
    f.members.push_back(mem.h);
    f.member_plk.push_back(mem.plk);
  }
  return f;
}

std::string design_to_json(const Design& design) {
  return design_file_json(design_file_from_design(design)).dump();
}

std::string design_file_to_json(const DesignFile& file) { return design_file_json(file).dump(); }

DesignFile design_file_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("bad design JSON: ") + e.what());
  }
  try {
    return design_file_from(j);
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("bad design JSON: ") + e.what());
  }
}

std::string subspace_to_json(const Subspace& s) { return subspace_json(s).dump(); }

std::string report_to_json(const DesignReport& report, const DesignFile& design) {
  json out;
  out["n_members"] = report.n_members;
  out["s"] = report.s;
  out["mode"] = report.mode.to_string();
  out["design"] = design_file_json(design);
  if (report.weak) {
    out["A_weak"] = report.weak->value;
    out["witness_weak"] = subspace_json(report.weak->witness);
  }
  if (report.strong) {
    out["A_strong"] = report.strong->value;
    out["witness_strong"] = subspace_json(report.strong->witness);
  }
  if (report.hp) {
    json hp;
    hp["is_generator"] = report.hp->is_generator;
    hp["blocker"] = report.hp->blocker ? subspace_json(*report.hp->blocker) : json(nullptr);
    hp["equivalence_hypothesis_failed"] = report.hp->equivalence_hypothesis_failed;
    out["hp"] = std::move(hp);
  }
  return out.dump();
}

ParsedReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("bad report JSON: ") + e.what());
  }
  try {
    ParsedReport parsed{design_file_from(j.at("design")), {}};
    DesignReport& rep = parsed.report;
    rep.n_members = j.at("n_members").get<int>();
    rep.s = j.at("s").get<int>();
    rep.mode = VerifyMode::parse(j.at("mode").get<std::string>(), 0);
    if (j.contains("A_weak")) {
      MeasureResult mr{j.at("A_weak").get<int>(),
                       subspace_from_json(j.at("witness_weak"), parsed.design.field,
                                          parsed.design.m),
                       rep.mode};
      rep.weak = std::move(mr);
    }
    if (j.contains("A_strong")) {
      MeasureResult mr{j.at("A_strong").get<int>(),
                       subspace_from_json(j.at("witness_strong"), parsed.design.field,
                                          parsed.design.m),
                       rep.mode};
      rep.strong = std::move(mr);
    }
    if (j.contains("hp")) {
      const auto& hj = j.at("hp");
      HpVerdict hp;
      hp.is_generator = hj.at("is_generator").get<bool>();
      if (!hj.at("blocker").is_null())
        hp.blocker = subspace_from_json(hj.at("blocker"), parsed.design.field, parsed.design.m);
      hp.equivalence_hypothesis_failed = hj.value("equivalence_hypothesis_failed", false);
      rep.hp = std::move(hp);
    }
    return parsed;
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("bad report JSON: ") + e.what());
  }
}

bool recheck_report(const ParsedReport& parsed) {
  const auto& members = parsed.design.members;
  const auto& rep = parsed.report;
  if (rep.n_members != static_cast<int>(members.size())) return false;
  if (rep.weak) {
    if (count_meeting(members, rep.weak->witness) != rep.weak->value) return false;
  }
  if (rep.strong) {
    if (sum_intersection_ranks(members, rep.strong->witness) != rep.strong->value) return false;
  }
  if (rep.hp && rep.hp->blocker) {
    for (const auto& h : members)
      if (intersect(h, *rep.hp->blocker).rank() == 0) return false;
    if (rep.hp->is_generator) return false;  // a blocker refutes the verdict
  }
  return true;
}

std::string bounds_to_json(int d, int k, const std::optional<BigInt>& q) {
  json out;
  out["finite_bound"] = generator_set_lower_bound(d, k, q);
  out["closed_field_bound"] = closed_field_lower_bound(d, k);
  return out.dump();
}

std::string conditions_to_json(int r, int s, const Field& field) {
  ExistenceReport rep = existence_conditions(r, s, field);
  json out;
  out["field"] = field.spec_string();
  out["r"] = r;
  out["s"] = s;
  out["char_zero"] = rep.char_zero;
  out["char_gt_r_plus_s"] = rep.char_gt_m;
  out["size_gt_binom_bound"] = rep.size_gt_binom;
  out["size_gt_char_power_bound"] = rep.size_gt_char_pow;
  out["any"] = rep.char_zero || rep.char_gt_m || rep.size_gt_binom || rep.size_gt_char_pow;
  return out.dump();
}

std::string explore_omega_to_json(const FieldPtr& field, int r, int s, Family family) {
  json viable = json::array();
  for (uint64_t w = 1; w < field->q(); ++w) {
    CoefficientScheme scheme(field, family, r, s, static_cast<uint32_t>(w));
    if (check_coeffs_nonzero(scheme).all_nonzero) viable.push_back(w);
  }
  json out;
  out["family"] = family_to_string(family);
  out["field"] = field->spec_string();
  out["r"] = r;
  out["s"] = s;
  out["viable_omegas"] = std::move(viable);
  return out.dump();
}

std::string field_info_to_json(const Field& field) {
  json out;
  out["p"] = field.p();
  out["h"] = field.h();
  out["q"] = field.q();
  out["modulus"] = field.modulus();
  out["spec"] = field.spec_string();
  return out.dump();
}

}  // namespace hpd
