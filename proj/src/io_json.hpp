#ifndef HPD_IO_JSON_HPP
#define HPD_IO_JSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "designs.hpp"

namespace hpd {

/// A deserialized design file: either a constructed moment-curve family
/// (family/omega present) or a bare member list.
struct DesignFile {
  FieldPtr field;
  int m = 0;
  int r = 0;
  std::optional<Family> family;
  std::optional<uint32_t> omega;
  std::vector<std::optional<uint32_t>> member_t;  // parallel to members
  std::vector<Subspace> members;
  std::vector<std::optional<PlueckerVector>> member_plk;
};

std::string design_to_json(const Design& design);
std::string design_file_to_json(const DesignFile& file);
DesignFile design_file_from_json(const std::string& json);

DesignFile design_file_from_design(const Design& design);

/// Report serialization embeds the design so certificates re-verify from the
/// report alone.
std::string report_to_json(const DesignReport& report, const DesignFile& design);

struct ParsedReport {
  DesignFile design;
  DesignReport report;
};
ParsedReport report_from_json(const std::string& json);

/// Re-derives every certificate in the report: witness counts, blocker
/// meets, and failing-subspace statements. True when all reproduce.
bool recheck_report(const ParsedReport& parsed);

std::string subspace_to_json(const Subspace& s);

std::string bounds_to_json(int d, int k, const std::optional<BigInt>& q);
std::string conditions_to_json(int r, int s, const Field& field);
std::string explore_omega_to_json(const FieldPtr& field, int r, int s, Family family);
std::string field_info_to_json(const Field& field);

}  // namespace hpd

#endif
