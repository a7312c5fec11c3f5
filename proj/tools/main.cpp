// Command-line front end for the hpdesign shared library. Talks to the core
// exclusively through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpdesign/hpdesign.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct CString {
  char* s = nullptr;
  ~CString() { hpd_string_free(s); }
};

int report_error(int status) {
  std::cerr << "error: " << hpd_status_name(status) << ": " << hpd_last_error() << "\n";
  return kExitUsage;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void render_table(std::ostream& out, const nlohmann::json& j, const std::string& indent = "") {
  for (const auto& [key, val] : j.items()) {
    if (key == "members") {
      out << indent << key << ": " << val.size() << " member(s)\n";
      continue;
    }
    if (val.is_object()) {
      out << indent << key << ":\n";
      render_table(out, val, indent + "  ");
    } else {
      out << indent << key << ": " << val.dump() << "\n";
    }
  }
}

void emit(const std::string& json_text, const std::string& format, const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      std::exit(kExitUsage);
    }
    out = &file;
  }
  if (format == "table") {
    render_table(*out, nlohmann::json::parse(json_text));
  } else {
    *out << json_text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment-curve subspace designs over finite fields: construction, "
               "exact verification, duality, bounds"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "json";
  std::string out_path;
  uint64_t seed = 0;
  uint64_t budget = 10000000;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_scan_opts) {
    cmd->add_option("--format", format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("-o,--output", out_path, "Write output to a file instead of stdout");
    if (with_scan_opts) {
      cmd->add_option("--seed", seed, "Seed for sampled scans (default 0)");
      cmd->add_option("--budget", budget, "Candidate cap for exhaustive scans");
      cmd->add_option("--threads", threads, "Worker pool size (0 = hardware parallelism)");
    }
  };

  // construct
  auto* construct = app.add_subcommand("construct", "Build a family {H(t) | t in F}");
  std::string family, field_spec, omega;
  int r = 2, s = 2;
  bool explore = false;
  construct->add_option("--family", family, "tangent, diverted or secant")->required();
  construct->add_option("--r", r, "Member rank r")->required();
  construct->add_option("--s", s, "Co-rank s (ambient m = r+s)")->required();
  construct->add_option("--field", field_spec, "Field spec, e.g. 5 or 2^2:modulus=1,1,1")
      ->required();
  construct->add_option("--omega", omega, "Element code for omega (scanned when omitted)");
  construct->add_flag("--explore", explore,
                      "List all viable omega codes instead of building the design");
  add_common(construct, false);

  // verify
  auto* verify = app.add_subcommand("verify", "Measure a design and certify its properties");
  std::string design_path, recheck_path, mode = "exhaustive", subset;
  bool check_weak = false, check_strong = false, check_hp = false;
  verify->add_option("--design", design_path, "Design JSON file");
  verify->add_option("--recheck", recheck_path, "Re-verify the certificates in a report file");
  verify->add_flag("--weak", check_weak, "Measure the weak parameter A_weak");
  verify->add_flag("--strong", check_strong, "Measure the strong parameter A_strong");
  verify->add_flag("--hp", check_hp, "Higgledy-piggledy verdict (blocker search)");
  verify->add_option("--mode", mode, "exhaustive or sampled:N[:SEED]");
  verify->add_option("--subset", subset, "Comma-separated member indices to verify");
  add_common(verify, true);

  // dual
  auto* dual = app.add_subcommand("dual", "Orthogonal complements of all members");
  std::string dual_design;
  dual->add_option("--design", dual_design, "Design JSON file")->required();
  add_common(dual, false);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower bounds for generator sets of k-subspaces");
  int bd = 3, bk = 1;
  std::string bq;
  bounds->add_option("--d", bd, "Projective dimension d")->required();
  bounds->add_option("--k", bk, "Subspace dimension k")->required();
  bounds->add_option("--q", bq, "Field size (decimal) or inf");
  add_common(bounds, false);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream all rank-r subspaces of F_q^m");
  std::string efield;
  int em = 4, er = 2;
  bool count_only = false;
  uint64_t enum_budget = 100000000;
  enumerate->add_option("--field", efield, "Field spec")->required();
  enumerate->add_option("--m", em, "Ambient rank m")->required();
  enumerate->add_option("--r", er, "Subspace rank r")->required();
  enumerate->add_flag("--count-only", count_only, "Print the Gaussian binomial only");
  enumerate->add_option("--budget", enum_budget, "Refuse streams larger than this");
  enumerate->add_option("-o,--output", out_path, "Write output to a file instead of stdout");

  // conditions
  auto* conditions =
      app.add_subcommand("conditions", "Existence conditions for strong (s, r*s) designs");
  std::string cfield;
  int cr = 2, cs = 2;
  conditions->add_option("--r", cr, "Rank r")->required();
  conditions->add_option("--s", cs, "Co-rank s")->required();
  conditions->add_option("--field", cfield, "Field spec")->required();
  add_common(conditions, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (construct->parsed()) {
    CString out;
    int status;
    if (explore) {
      status = hpd_design_explore_omega(family.c_str(), r, s, field_spec.c_str(), &out.s);
    } else {
      status = hpd_design_construct(family.c_str(), r, s, field_spec.c_str(),
                                    omega.empty() ? nullptr : omega.c_str(), &out.s);
    }
    if (status != HPD_OK) return report_error(status);
    emit(out.s, format, out_path);
    return 0;
  }

  if (verify->parsed()) {
    if (!recheck_path.empty()) {
      std::string report = read_file(recheck_path);
      int ok = 0;
      int status = hpd_report_recheck(report.c_str(), &ok);
      if (status != HPD_OK) return report_error(status);
      std::cout << (ok ? "recheck: ok" : "recheck: FAILED") << "\n";
      return ok ? 0 : kExitFalse;
    }
    if (design_path.empty()) {
      std::cerr << "error: verify needs --design or --recheck\n";
      return kExitUsage;
    }
    if (!check_weak && !check_strong && !check_hp) check_weak = check_strong = check_hp = true;
    std::string design = read_file(design_path);
    CString out;
    int verdict = 1;
    int status = hpd_design_verify(design.c_str(), subset.empty() ? nullptr : subset.c_str(),
                                   check_weak, check_strong, check_hp, mode.c_str(), budget,
                                   threads, seed, &out.s, &verdict);
    if (status != HPD_OK) return report_error(status);
    emit(out.s, format, out_path);
    return verdict ? 0 : kExitFalse;
  }

  if (dual->parsed()) {
    std::string design = read_file(dual_design);
    CString out;
    int status = hpd_design_dual(design.c_str(), &out.s);
    if (status != HPD_OK) return report_error(status);
    emit(out.s, format, out_path);
    return 0;
  }

  if (bounds->parsed()) {
    CString out;
    int status = hpd_bounds(bd, bk, bq.empty() ? nullptr : bq.c_str(), &out.s);
    if (status != HPD_OK) return report_error(status);
    emit(out.s, format, out_path);
    return 0;
  }

  if (enumerate->parsed()) {
    if (count_only) {
      CString out;
      int status = hpd_count_subspaces(efield.c_str(), em, er, &out.s);
      if (status != HPD_OK) return report_error(status);
      std::cout << out.s << "\n";
      return 0;
    }
    {
      CString count;
      int status = hpd_count_subspaces(efield.c_str(), em, er, &count.s);
      if (status != HPD_OK) return report_error(status);
      std::string c(count.s);
      if (c.size() > 20 || std::stoull(c) > enum_budget) {
        std::cerr << "error: " << c << " subspaces exceed the enumeration budget "
                  << enum_budget << " (use --count-only or raise --budget)\n";
        return kExitUsage;
      }
    }
    hpd_enum* it = nullptr;
    int status = hpd_enum_open(efield.c_str(), em, er, &it);
    if (status != HPD_OK) return report_error(status);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        hpd_enum_close(it);
        return kExitUsage;
      }
      out = &file;
    }
    while (true) {
      CString chunk;
      status = hpd_enum_next(it, &chunk.s);
      if (status != HPD_OK) {
        hpd_enum_close(it);
        return report_error(status);
      }
      if (!chunk.s) break;
      *out << chunk.s << "\n";
    }
    hpd_enum_close(it);
    return 0;
  }

  if (conditions->parsed()) {
    CString out;
    int status = hpd_conditions(cr, cs, cfield.c_str(), &out.s);
    if (status != HPD_OK) return report_error(status);
    emit(out.s, format, out_path);
    return 0;
  }

  return kExitUsage;
}
