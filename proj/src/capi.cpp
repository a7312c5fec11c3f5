#include "hpdesign/hpdesign.h"

#include <cstring>
#include <new>
#include <string>
#include <thread>

#include "designs.hpp"
#include "io_json.hpp"

using namespace hpd;

struct hpd_field {
  FieldPtr field;
};

struct hpd_enum {
  FieldPtr field;
  GrassmannIterator it;
  uint64_t pos;
};

namespace {

thread_local std::string g_last_error;

int code_of(Err e) {
  switch (e) {
    case Err::NonPrimeCharacteristic: return HPD_ERR_NON_PRIME_CHARACTERISTIC;
    case Err::ReducibleModulus: return HPD_ERR_REDUCIBLE_MODULUS;
    case Err::DivisionByZero: return HPD_ERR_DIVISION_BY_ZERO;
    case Err::FieldMismatch: return HPD_ERR_FIELD_MISMATCH;
    case Err::ZeroElement: return HPD_ERR_ZERO_ELEMENT;
    case Err::AmbientMismatch: return HPD_ERR_AMBIENT_MISMATCH;
    case Err::ShapeMismatch: return HPD_ERR_SHAPE_MISMATCH;
    case Err::ZeroRankSubspace: return HPD_ERR_ZERO_RANK_SUBSPACE;
    case Err::RankOutOfRange: return HPD_ERR_RANK_OUT_OF_RANGE;
    case Err::NonPolynomialScheme: return HPD_ERR_NON_POLYNOMIAL_SCHEME;
    case Err::InvalidScheme: return HPD_ERR_INVALID_SCHEME;
    case Err::ZeroPolynomial: return HPD_ERR_ZERO_POLYNOMIAL;
    case Err::UnequalIndexSums: return HPD_ERR_UNEQUAL_INDEX_SUMS;
    case Err::IdenticalTuples: return HPD_ERR_IDENTICAL_TUPLES;
    case Err::BudgetExceeded: return HPD_ERR_BUDGET_EXCEEDED;
    case Err::HypothesisViolated: return HPD_ERR_HYPOTHESIS_VIOLATED;
    case Err::BaseCaseBudgetExceeded: return HPD_ERR_BASE_CASE_BUDGET_EXCEEDED;
    case Err::ParameterOutOfRange: return HPD_ERR_PARAMETER_OUT_OF_RANGE;
    case Err::LengthMismatch: return HPD_ERR_LENGTH_MISMATCH;
    case Err::MonotonicityViolation: return HPD_ERR_MONOTONICITY_VIOLATION;
    case Err::ZeroDeterminant: return HPD_ERR_ZERO_DETERMINANT;
    case Err::Parse: return HPD_ERR_PARSE;
    case Err::Internal: return HPD_ERR_INTERNAL;
  }
  return HPD_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HPD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HPD_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return HPD_ERR_INTERNAL;
  }
}

std::vector<Subspace> subset_members(const DesignFile& file, const char* subset) {
  if (!subset || !*subset) return file.members;
  std::vector<Subspace> out;
  std::string s(subset);
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) fail(Err::Parse, "bad subset '" + s + "'");
    size_t idx = 0;
    try {
      idx = std::stoul(item);
    } catch (const std::exception&) {
      fail(Err::Parse, "bad subset '" + s + "'");
    }
    if (idx >= file.members.size())
      fail(Err::ParameterOutOfRange, "subset index " + item + " out of range");
    out.push_back(file.members[idx]);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* hpd_version(void) { return "0.1.0"; }

const char* hpd_status_name(int status) {
  switch (status) {
    case HPD_OK: return "OK";
    case HPD_ERR_NON_PRIME_CHARACTERISTIC: return "NonPrimeCharacteristic";
    case HPD_ERR_REDUCIBLE_MODULUS: return "ReducibleModulus";
    case HPD_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case HPD_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case HPD_ERR_ZERO_ELEMENT: return "ZeroElement";
    case HPD_ERR_AMBIENT_MISMATCH: return "AmbientMismatch";
    case HPD_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case HPD_ERR_ZERO_RANK_SUBSPACE: return "ZeroRankSubspace";
    case HPD_ERR_RANK_OUT_OF_RANGE: return "RankOutOfRange";
    case HPD_ERR_NON_POLYNOMIAL_SCHEME: return "NonPolynomialScheme";
    case HPD_ERR_INVALID_SCHEME: return "InvalidScheme";
    case HPD_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case HPD_ERR_UNEQUAL_INDEX_SUMS: return "UnequalIndexSums";
    case HPD_ERR_IDENTICAL_TUPLES: return "IdenticalTuples";
    case HPD_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case HPD_ERR_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case HPD_ERR_BASE_CASE_BUDGET_EXCEEDED: return "BaseCaseBudgetExceeded";
    case HPD_ERR_PARAMETER_OUT_OF_RANGE: return "ParameterOutOfRange";
    case HPD_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case HPD_ERR_MONOTONICITY_VIOLATION: return "MonotonicityViolation";
    case HPD_ERR_ZERO_DETERMINANT: return "ZeroDeterminant";
    case HPD_ERR_PARSE: return "Parse";
    case HPD_ERR_INTERNAL: return "Internal";
    case HPD_ERR_OUT_OF_MEMORY: return "OutOfMemory";
  }
  return "Unknown";
}

const char* hpd_last_error(void) { return g_last_error.c_str(); }

void hpd_string_free(char* s) { std::free(s); }

int hpd_field_open(const char* spec, hpd_field** out) {
  if (!spec || !out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] { *out = new hpd_field{Field::parse(spec)}; });
}

void hpd_field_close(hpd_field* f) { delete f; }

int hpd_field_info(const hpd_field* f, char** json_out) {
  if (!f || !json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] { *json_out = dup_string(field_info_to_json(*f->field)); });
}

int hpd_design_construct(const char* family, int r, int s, const char* field_spec,
                         const char* omega, char** design_json_out) {
  if (!family || !field_spec || !design_json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    FieldPtr field = Field::parse(field_spec);
    Family fam = family_from_string(family);
    std::optional<uint32_t> w;
    if (omega && *omega) {
      w = static_cast<uint32_t>(std::stoul(omega));
    } else if (fam != Family::Tangent) {
      w = find_omega(field, r, s, fam);
      if (!w)
        fail(Err::InvalidScheme,
             "no omega in " + field->spec_string() + " makes every coefficient nonzero");
    }
    Design design = Design::build(CoefficientScheme(field, fam, r, s, w));
    *design_json_out = dup_string(design_to_json(design));
  });
}

int hpd_design_explore_omega(const char* family, int r, int s, const char* field_spec,
                             char** json_out) {
  if (!family || !field_spec || !json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    FieldPtr field = Field::parse(field_spec);
    Family fam = family_from_string(family);
    if (fam == Family::Tangent)
      fail(Err::ParameterOutOfRange, "omega exploration applies to diverted and secant");
    *json_out = dup_string(explore_omega_to_json(field, r, s, fam));
  });
}

int hpd_design_dual(const char* design_json, char** design_json_out) {
  if (!design_json || !design_json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    DesignFile file = design_file_from_json(design_json);
    DesignFile dual;
    dual.field = file.field;
    dual.m = file.m;
    dual.r = file.m - file.r;
    for (size_t i = 0; i < file.members.size(); ++i) {
      dual.member_t.push_back(file.member_t[i]);
      dual.members.push_back(orthogonal_complement(file.members[i]));
      dual.member_plk.push_back(std::nullopt);
    }
    *design_json_out = dup_string(design_file_to_json(dual));
  });
}

int hpd_design_verify(const char* design_json, const char* subset, int check_weak,
                      int check_strong, int check_hp, const char* mode, uint64_t budget,
                      int threads, uint64_t seed, char** report_json_out, int* verdict_out) {
  if (!design_json || !report_json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    DesignFile file = design_file_from_json(design_json);
    std::vector<Subspace> members = subset_members(file, subset);
    VerifyMode vm = VerifyMode::parse(mode && *mode ? mode : "exhaustive", seed);
    ExecContext ctx;
    ctx.budget = budget ? budget : 10'000'000;
    ctx.threads = threads > 0 ? threads
                              : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    DesignReport rep =
        verify_design(members, check_weak != 0, check_strong != 0, check_hp != 0, vm, ctx);
    DesignFile verified = file;
    if (subset && *subset) {
      verified.members = members;
      verified.member_t.assign(members.size(), std::nullopt);
      verified.member_plk.assign(members.size(), std::nullopt);
    }
    *report_json_out = dup_string(report_to_json(rep, verified));
    if (verdict_out) *verdict_out = (rep.hp && !rep.hp->is_generator) ? 0 : 1;
  });
}

int hpd_report_recheck(const char* report_json, int* ok_out) {
  if (!report_json || !ok_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    ParsedReport parsed = report_from_json(report_json);
    *ok_out = recheck_report(parsed) ? 1 : 0;
  });
}

int hpd_bounds(int d, int k, const char* q, char** json_out) {
  if (!json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    std::optional<BigInt> qv;
    if (q && *q && std::string(q) != "inf") {
      try {
        qv = BigInt(q);
      } catch (const std::exception&) {
        fail(Err::Parse, std::string("bad field size '") + q + "'");
      }
    }
    *json_out = dup_string(bounds_to_json(d, k, qv));
  });
}

int hpd_conditions(int r, int s, const char* field_spec, char** json_out) {
  if (!field_spec || !json_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    FieldPtr field = Field::parse(field_spec);
    *json_out = dup_string(conditions_to_json(r, s, *field));
  });
}

int hpd_count_subspaces(const char* field_spec, int m, int r, char** count_out) {
  if (!field_spec || !count_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    FieldPtr field = Field::parse(field_spec);
    BigInt count = gaussian_binomial(m, r, BigInt(field->q()));
    *count_out = dup_string(count.str());
  });
}

int hpd_enum_open(const char* field_spec, int m, int r, hpd_enum** out) {
  if (!field_spec || !out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    FieldPtr field = Field::parse(field_spec);
    *out = new hpd_enum{field, GrassmannIterator(field, m, r), 0};
  });
}

int hpd_enum_next(hpd_enum* it, char** text_out) {
  if (!it || !text_out) return HPD_ERR_PARAMETER_OUT_OF_RANGE;
  return guarded([&] {
    if (it->pos >= it->it.size()) {
      *text_out = nullptr;
      return;
    }
    *text_out = dup_string(subspace_to_text(it->it.at(it->pos++)));
  });
}

void hpd_enum_close(hpd_enum* it) { delete it; }

}  // extern "C"
