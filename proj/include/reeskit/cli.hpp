#ifndef REESKIT_CLI_HPP
#define REESKIT_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reeskit/export.hpp"
#include "reeskit/instance_file.hpp"

namespace reeskit {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode { kExitPass = 0, kExitUsage = 1, kExitAborted = 2, kExitFailed = 3 };

inline std::vector<CheckKind> default_checks(const Target& target) {
  if (const auto* inst = std::get_if<Instance>(&target)) {
    std::vector<CheckKind> out{CheckKind::GbMinors, CheckKind::SPairCertificates, CheckKind::InitialIdeal, CheckKind::KernelEqualityM, CheckKind::Dimension};
    if (inst->a.size() > 1) out.push_back(CheckKind::ColonIdentity);
    out.push_back(CheckKind::InductionMembership);
    out.push_back(CheckKind::SymbolicPower);
    return out;
  }
  std::vector<CheckKind> out{CheckKind::ReesPresentation, CheckKind::QuadraticGb, CheckKind::HeightQ};
  if (std::get<TruncationInstance>(target).f.size() == 2) out.push_back(CheckKind::DivisorialIdentity);
  return out;
}

/// Empty when the check can run on the target, else the reason it cannot.
inline std::string inapplicable(CheckKind kind, const Target& target) {
  bool powers = std::holds_alternative<Instance>(target);
  switch (kind) {
    case CheckKind::ReesPresentation:
    case CheckKind::HeightQ:
      return powers ? to_string(kind) + " needs mode = truncation" : "";
    case CheckKind::DivisorialIdentity:
      if (powers) return to_string(kind) + " needs mode = truncation";
      return std::get<TruncationInstance>(target).f.size() == 2 ? "" : to_string(kind) + " needs r = 2";
    case CheckKind::ColonIdentity:
      if (powers && std::get<Instance>(target).a.size() < 2) return "colon-identity needs at least two nonzero blocks (r >= 2)";
      return "";
    default:
      return "";
  }
}

/// 1 for errors, else 3 for failures, else 2 for aborts, else 0.
inline int exit_code(const std::vector<Report>& reports) {
  bool fail = false, abort = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Error) return kExitUsage;
    fail = fail || r.verdict == Verdict::Fail || r.verdict == Verdict::BoundExhausted;
    abort = abort || r.verdict == Verdict::Aborted;
  }
  return fail ? kExitFailed : abort ? kExitAborted : kExitPass;
}

inline void strip_timings(Json& j) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (k == "elapsedMs") {
        v = 0;
      } else {
        strip_timings(v);
      }
    }
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

inline Json report_document(const InstanceFile& file, const std::vector<Report>& reports, bool timings = true) {
  Json doc;
  doc["tool"] = "reeskit";
  doc["version"] = kVersion;
  doc["command"] = "verify";
  doc["instance"] = instance_json(file.target);
  doc["seed"] = file.seed;
  auto p = file.params();
  doc["guards"] = {{"pairCap", p.gb.max_pairs}, {"degCap", p.gb.max_degree}};
  Json counts = {{"pass", 0}, {"fail", 0}, {"aborted", 0}, {"bound-exhausted", 0}, {"error", 0}};
  Json items = Json::array();
  for (const auto& r : reports) {
    counts[to_string(r.verdict)] = counts[to_string(r.verdict)].get<int>() + 1;
    items.push_back(r.to_json());
  }
  doc["reports"] = items;
  doc["summary"] = counts;
  doc["exitCode"] = exit_code(reports);
  if (!timings) strip_timings(doc);
  return doc;
}

namespace detail {

template <class F>
void print_list(std::ostream& os, const std::string& title, const std::vector<Polynomial<F>>& ps) {
  os << title << " (" << ps.size() << "):\n";
  for (const auto& p : ps) os << "  " << p.to_string() << "\n";
}

template <class F>
void construct_powers(std::ostream& os, F field, const Instance& inst) {
  auto m = ReesModel<F>::make(field, inst);
  if (inst.stripped_zeros) {
    os << "zero blocks stripped: " << inst.stripped_zeros << " (the Rees algebra gains a polynomial factor in " << inst.stripped_zeros
       << " extra t-variables)\n";
  }
  os << "matrix B (" << m.B.rows << " x " << m.B.cols() << "):\n" << m.B.to_string();
  os << "matrix C (" << m.C.rows << " x " << m.C.cols() << "):\n" << m.C.to_string();
  print_list(os, "minors of B, special fiber ideal", minors2(m.B, m.t_ring));
  print_list(os, "minors of C, Rees ideal", minors2(m.C, m.s_ring));
}

template <class F>
void construct_truncation(std::ostream& os, F field, const TruncationInstance& ti, const GbOptions& opts, bool oracle) {
  auto tm = TruncationModel<F>::make(field, ti);
  os << "degrees:";
  for (int d : tm.degrees) os << " " << d;
  os << "\na = (";
  for (std::size_t i = 0; i < tm.a().size(); ++i) os << (i ? "," : "") << tm.a()[i];
  os << "), delta = " << tm.delta() << ", branch: " << (tm.large_d() ? "d >= d1 + d2" : "d < d1 + d2") << "\n";
  print_list(os, "truncation generators (degree " + std::to_string(tm.d) + ")", tm.truncation_generators());
  os << "matrix C (" << tm.rees.C.rows << " x " << tm.rees.C.cols() << "):\n" << tm.rees.C.to_string();
  try {
    auto hs = tm.h_polynomials();
    os << "h-polynomials (" << hs.polys.size() << "):\n";
    for (std::size_t k = 0; k < hs.polys.size(); ++k) {
      os << "  h" << k + 1 << " = " << hs.polys[k].to_string() << "   [pair (" << hs.labels[k].i << "," << hs.labels[k].j << "), " << hs.labels[k].basis_word
         << "]\n";
    }
    if (!tm.large_d()) print_list(os, "L^(delta) generators (A_{>=delta} of the C-matrix ring)", a_geq_generators(tm.rees.s_ring, tm.delta()));
    print_list(os, "Rees presentation", tm.rees_presentation(opts).generators());
    print_list(os, "special fiber presentation", tm.fiber_presentation(opts).generators());
  } catch (const OutOfProvenRange& e) {
    os << "Rees presentation: outside proven range (" << e.what() << ")\n";
    if (!oracle) throw;
    print_list(os, "kernel of chi (elimination oracle, reduced basis)", kernel_of_map(tm.chi(), opts).groebner(opts));
    print_list(os, "fiber kernel (elimination oracle, reduced basis)", kernel_of_map(tm.fiber_map(), opts).groebner(opts));
  }
}

}  // namespace detail

inline std::string construct_text(const InstanceFile& file, bool oracle = false) {
  std::ostringstream os;
  os << "instance: " << describe(file.target) << ", field " << field_of(file.target).to_string() << "\n";
  auto opts = file.params().gb;
  const auto& spec = field_of(file.target);
  auto run = [&](auto field) {
    if (const auto* inst = std::get_if<Instance>(&file.target)) {
      detail::construct_powers(os, field, *inst);
    } else {
      detail::construct_truncation(os, field, std::get<TruncationInstance>(file.target), opts, oracle);
    }
  };
  if (spec.kind == FieldKind::Rationals) {
    run(Rationals{});
  } else {
    run(PrimeField(spec.characteristic));
  }
  return os.str();
}

inline std::vector<Report> verify(const InstanceFile& file, const std::vector<CheckKind>& checks, unsigned jobs) {
  std::vector<PlanItem> plan;
  for (auto k : checks) plan.push_back({k, file.target, file.params()});
  return sweep(plan, jobs);
}

/// Full command line; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"reeskit: Rees algebras and special fiber rings of direct sums of powers of the maximal ideal and of truncations of complete intersections"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string path, field, checks, dialect = "plain", report_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pair_cap;
  std::optional<std::uint32_t> deg_cap;
  unsigned jobs = 1;
  bool json = false, no_timings = false, oracle = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("instance-file", path, "instance file (key = value lines)")->required();
    sub->add_option("--field", field, "override the field: Q or Fp:<p>");
    sub->add_option("--seed", seed, "override the seed");
    sub->add_option("--pair-cap", pair_cap, "abort after this many S-pairs")->check(CLI::PositiveNumber);
    sub->add_option("--deg-cap", deg_cap, "abort on basis elements above this degree")->check(CLI::PositiveNumber);
  };
  auto* construct = app.add_subcommand("construct", "print matrices, generators and presentations");
  common(construct);
  construct->add_flag("--oracle", oracle, "outside the proven range, print the elimination-oracle kernels");
  auto* verify_cmd = app.add_subcommand("verify", "run checks and write a report");
  common(verify_cmd);
  verify_cmd->add_option("--checks", checks, "comma-separated check names");
  verify_cmd->add_option("--jobs", jobs, "concurrent checks")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", report_path, "write the JSON report to this file");
  verify_cmd->add_flag("--json", json, "print the JSON report instead of the text summary");
  verify_cmd->add_flag("--no-timings", no_timings, "zero every elapsedMs field in the JSON report");
  auto* export_cmd = app.add_subcommand("export", "emit a script for another computer algebra system");
  common(export_cmd);
  export_cmd->add_option("--dialect", dialect, "plain, m2 or singular");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  InstanceFile file;
  try {
    file = load_instance_file(path);
    if (!field.empty()) set_field(file.target, FieldSpec::parse(field));
    if (seed) file.seed = *seed;
    if (pair_cap) file.pair_cap = pair_cap;
    if (deg_cap) file.deg_cap = deg_cap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) {
      out << construct_text(file, oracle);
      return kExitPass;
    }
    if (*export_cmd) {
      out << export_script(file, parse_dialect(dialect), file.params().gb);
      return kExitPass;
    }
  } catch (const GuardExceeded& e) {
    err << "aborted: " << e.what() << "\n";
    return kExitAborted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CheckKind> kinds;
  try {
    if (!checks.empty()) {
      std::stringstream ss(checks);
      std::string name;
      while (std::getline(ss, name, ',')) kinds.push_back(parse_check(detail::trim(name)));
    } else if (!file.checks.empty()) {
      kinds = file.checks;
    } else {
      kinds = default_checks(file.target);
    }
    for (auto k : kinds) {
      auto why = inapplicable(k, file.target);
      if (!why.empty()) throw Error(why);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n" << app.help("", CLI::AppFormatMode::Normal);
    return kExitUsage;
  }

  auto reports = verify(file, kinds, jobs);
  auto doc = report_document(file, reports, !no_timings);
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write report '" << report_path << "'\n";
      return kExitUsage;
    }
    f << doc.dump(2) << "\n";
  }
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "instance: " << describe(file.target) << ", field " << field_of(file.target).to_string() << ", seed " << file.seed << "\n";
    for (const auto& r : reports) out << r.text(false) << "\n";
    const auto& s = doc["summary"];
    out << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["aborted"] << " aborted, " << s["bound-exhausted"] << " bound-exhausted, "
        << s["error"] << " error; exit " << doc["exitCode"] << "\n";
  }
  return doc["exitCode"].get<int>();
}

}  // namespace reeskit

#endif  // REESKIT_CLI_HPP
