#include "lsakit_cli/app.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lsakit/constructions.hpp"
#include "lsakit/deformations.hpp"
#include "lsakit/phase_space.hpp"
#include "lsakit_cli/output.hpp"

namespace lsakit::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string format = "json";
  std::size_t max_degree = 3;
  std::uint64_t seed = 1;
  bool paper_literal = false;
  bool no_timestamp = false;
};

/// Usage problems detected after parsing; reported like schema errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Common& common, json report) {
  if (!common.no_timestamp) report["timestamp"] = utc_timestamp();
  if (common.format == "text" && report.contains("records")) {
    out << report_text(report);
  } else {
    out << report.dump(2) << '\n';
  }
}

int status_code(const json& report) { return report.value("status", "pass") == "fail" ? 1 : 0; }

SuiteOptions options_from(const Common& common, std::set<Suite> suites) {
  SuiteOptions options;
  options.suites = std::move(suites);
  options.seed = common.seed;
  options.max_degree = common.max_degree;
  options.paper_literal = common.paper_literal;
  return options;
}

const PolyMatrix& endomorphism(const Instance& inst, const std::string& name) {
  auto it = inst.endomorphisms.find(name);
  if (it == inst.endomorphisms.end()) {
    throw UsageError("instance has no endomorphism named \"" + name + "\"");
  }
  return it->second;
}

MultiDerivation deformation(const Instance& inst, const std::string& name) {
  if (name == "0") return MultiDerivation(inst.algebroid.rank(), 2, inst.algebroid.nvars());
  auto it = inst.deformations.find(name);
  if (it == inst.deformations.end()) {
    throw UsageError("instance has no deformation named \"" + name + "\"");
  }
  return it->second;
}

json multiderivation_json(const MultiDerivation& d, const std::vector<std::string>& coords) {
  json values = json::object();
  for (const auto& [key, value] : d.values()) {
    IndexTuple idx = key.first;
    idx.push_back(key.second);
    json comps = json::array();
    for (const auto& p : value.components()) comps.push_back(p.to_string(coords));
    values[frame_label(idx)] = std::move(comps);
  }
  json symbols = json::object();
  for (const auto& [key, field] : d.symbols()) {
    json comps = json::array();
    for (const auto& p : field.components()) comps.push_back(p.to_string(coords));
    symbols[frame_label(key)] = std::move(comps);
  }
  return {{"degree", d.degree()}, {"values", values}, {"symbols", symbols}};
}

void guarded(Report& report, const std::string& prefix, const std::function<void()>& body) {
  try {
    body();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError) throw;
    report.add(prefix + "error", "construction completes", {e.what()});
  }
}

int cmd_check(const Instance& inst, const Common& common, const std::vector<std::string>& names,
              std::ostream& out) {
  std::set<Suite> suites;
  for (const auto& n : names) {
    bool found = false;
    for (Suite s : all_suites()) {
      if (n == to_string(s)) {
        suites.insert(s);
        found = true;
      }
    }
    if (!found) throw UsageError("unknown suite \"" + n + "\"");
  }
  if (suites.empty()) suites.insert(Suite::Axioms);
  const json report = report_json(inst, "check", run_suite(inst, options_from(common, suites)));
  emit(out, common, report);
  return status_code(report);
}

int cmd_derive(const Instance& inst, const Common& common, const std::string& kind,
               std::ostream& out, std::ostream& err) {
  const LSAlgebroid& a = inst.algebroid;
  json derived;
  try {
    if (kind == "sub-adjacent") {
      derived = algebroid_to_json(sub_adjacent(a), "bracket");
      derived["kind"] = "lie_algebroid";
    } else if (kind == "phase-space") {
      const PhaseSpace ps = build_phase_space(a);
      derived = algebroid_to_json(ps.P, "bracket");
      derived["kind"] = "lie_algebroid";
      std::vector<std::string> frame;
      for (std::size_t i = 0; i < a.rank(); ++i) frame.push_back("e" + std::to_string(i + 1));
      for (std::size_t i = 0; i < a.rank(); ++i) frame.push_back("eps" + std::to_string(i + 1));
      derived["frame"] = frame;
      derived["omega"] = matrix_to_json(form_matrix(ps.omega), a.coords());
      derived["paracomplex"] =
          matrix_to_json(canonical_paracomplex(a.rank(), a.nvars()), a.coords());
    } else if (kind == "semidirect") {
      if (!inst.representation) throw UsageError("--semidirect needs a representation block");
      derived = algebroid_to_json(semidirect_lsa(a, *inst.representation), "structure");
      derived["kind"] = "left_symmetric_algebroid";
    } else {
      if (!inst.action) throw UsageError("--action needs an action block");
      derived = algebroid_to_json(
          action_algebroid(a, inst.action->fields, inst.action->coordinates), "structure");
      derived["kind"] = "left_symmetric_algebroid";
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    err << "lsakit: " << e.what() << '\n';
    return 1;
  }
  json report{{"tool", "lsakit"},
              {"version", kToolVersion},
              {"command", "derive"},
              {"instance", {{"name", inst.name}, {"digest", "fnv1a64:" + inst.digest}}},
              {"derivation", kind},
              {"derived", derived}};
  emit(out, common, report);
  return 0;
}

int cmd_cohomology(const Instance& inst, const Common& common, bool point, bool cocycle,
                   bool coboundary, std::ostream& out) {
  const LSAlgebroid& a = inst.algebroid;
  if (!point && !cocycle && !coboundary) (a.is_point() ? point : cocycle) = true;
  SuiteResult result;
  if (point) {
    guarded(result.report, "cohomology/point/", [&] {
      result.data["cohomology"] = cohomology_dims_json(inst, common.max_degree);
    });
  }
  if (cocycle) {
    SuiteResult dd = run_suite(inst, options_from(common, {Suite::Cohomology}));
    result.report.append(dd.report);
    for (const auto& [name, w] : inst.deformations) {
      guarded(result.report, "cocycle/" + name + "/", [&] {
        const Report r = check_deformation(a, w);
        for (const auto& rec : r.records()) {
          if (rec.name == "closed") {
            CheckRecord copy = rec;
            copy.name = "cocycle/" + name + "/closed";
            result.report.add(std::move(copy));
          }
        }
      });
    }
  }
  if (coboundary) {
    json cobs = json::object();
    for (const auto& [name, n] : inst.endomorphisms) {
      if (n.rows() != a.rank() || n.cols() != a.rank()) continue;
      guarded(result.report, "coboundary/" + name + "/", [&] {
        const MultiDerivation dn = def_d(a, MultiDerivation::bundle_map(n));
        cobs[name] = multiderivation_json(dn, a.coords());
        const MultiDerivation ddn = def_d(a, dn);
        std::vector<std::string> witnesses;
        if (!ddn.is_zero()) witnesses.push_back("d_def(d_def " + name + ") has nonzero components");
        result.report.add("coboundary/" + name + "/closed", "d_def(d_def N) = 0",
                          std::move(witnesses));
      });
    }
    result.data["coboundaries"] = std::move(cobs);
  }
  const json report = report_json(inst, "cohomology", result);
  emit(out, common, report);
  return status_code(report);
}

int cmd_deform(const Instance& inst, const Common& common, const std::string& nijenhuis,
               const std::string& deform_name, const std::vector<std::string>& equivalence,
               std::ostream& out) {
  const LSAlgebroid& a = inst.algebroid;
  SuiteResult result;
  if (!nijenhuis.empty()) {
    const PolyMatrix& n = endomorphism(inst, nijenhuis);
    const std::string prefix = "nijenhuis/" + nijenhuis + "/";
    guarded(result.report, prefix, [&] {
      result.report.append(nijenhuis_report(a, n, common.paper_literal), prefix);
      if (!check_nijenhuis(a, n)) return;
      const TrivialDeformation td = trivial_deformation(a, n);
      result.report.append(td.report, prefix + "trivial/");
      result.report.append(
          check_equivalence(a, td.omega, MultiDerivation(a.rank(), 2, a.nvars()), n),
          prefix + "equivalence/");
      result.data["omega"] = multiderivation_json(td.omega, a.coords());
      result.data["deformed"] = algebroid_to_json(td.formal, "structure");
    });
  }
  if (!deform_name.empty()) {
    const MultiDerivation w = deformation(inst, deform_name);
    const std::string prefix = "deformation/" + deform_name + "/";
    guarded(result.report, prefix, [&] {
      const Report r = check_deformation(a, w);
      result.report.append(r, prefix);
      if (r.passed()) {
        result.data["deformed"] = algebroid_to_json(deformed_algebroid_formal(a, w), "structure");
      }
    });
  }
  if (!equivalence.empty()) {
    const MultiDerivation w = deformation(inst, equivalence[0]);
    const MultiDerivation wp = deformation(inst, equivalence[1]);
    const PolyMatrix& n = endomorphism(inst, equivalence[2]);
    guarded(result.report, "equivalence/", [&] {
      result.report.append(check_equivalence(a, w, wp, n), "equivalence/");
    });
  }
  const json report = report_json(inst, "deform", result);
  emit(out, common, report);
  return status_code(report);
}

int cmd_verify_all(const std::vector<std::string>& files, const Common& common,
                   std::ostream& out) {
  json reports = json::array();
  bool failed = false;
  const std::vector<Suite> every = all_suites();
  const std::set<Suite> suites(every.begin(), every.end());
  for (const auto& file : files) {
    const Instance inst = load_instance(file);
    json report = report_json(inst, "verify-all", run_suite(inst, options_from(common, suites)));
    failed = failed || status_code(report) != 0;
    reports.push_back(std::move(report));
  }
  if (common.format == "text") {
    for (const auto& r : reports) out << report_text(r);
    return failed ? 1 : 0;
  }
  json wrapper{{"tool", "lsakit"},
               {"version", kToolVersion},
               {"command", "verify-all"},
               {"status", failed ? "fail" : "pass"},
               {"reports", reports}};
  if (!common.no_timestamp) wrapper["timestamp"] = utc_timestamp();
  out << wrapper.dump(2) << '\n';
  return failed ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for left-symmetric algebroids", "lsakit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", common.max_degree, "Top cochain degree")
      ->check(CLI::Range(1, 8));
  app.add_option("--seed", common.seed, "Seed for randomized property samples");
  app.add_flag("--paper-literal", common.paper_literal,
               "Also evaluate the printed variant of the Nijenhuis condition");
  app.add_flag("--no-timestamp", common.no_timestamp, "Omit the timestamp field");

  std::string file;
  auto* check = app.add_subcommand("check", "Run verification suites (default: axioms)");
  std::vector<std::string> suite_names;
  check->add_option("file", file, "Instance file")->required();
  check->add_option("--suite", suite_names,
                    "axioms, sub-adjacent, phase-space, graded, cohomology, deformation");

  auto* derive = app.add_subcommand("derive", "Print a derived structure");
  derive->add_option("file", file, "Instance file")->required();
  std::string kind;
  auto* g = derive->add_option_group("construction");
  g->add_flag_callback("--sub-adjacent", [&] { kind = "sub-adjacent"; });
  g->add_flag_callback("--phase-space", [&] { kind = "phase-space"; });
  g->add_flag_callback("--semidirect", [&] { kind = "semidirect"; });
  g->add_flag_callback("--action", [&] { kind = "action"; });
  g->require_option(1);

  auto* cohom = app.add_subcommand("cohomology", "Cochain complexes and point cohomology");
  cohom->add_option("file", file, "Instance file")->required();
  bool point = false, cocycle = false, coboundary = false;
  cohom->add_flag("--point", point, "Exact dimensions over a point");
  cohom->add_flag("--cocycle", cocycle, "d o d = 0 samples and closedness of named deformations");
  cohom->add_flag("--coboundary", coboundary, "d_def of named endomorphisms");

  auto* deform = app.add_subcommand("deform", "Deformations and Nijenhuis operators");
  deform->add_option("file", file, "Instance file")->required();
  std::string nij, dname;
  std::vector<std::string> equivalence;
  deform->add_option("--nijenhuis", nij, "Endomorphism name");
  deform->add_option("--deformation", dname, "Deformation name");
  deform->add_option("--equivalence", equivalence, "W W' N (\"0\" names the zero deformation)")
      ->expected(3);

  auto* verify = app.add_subcommand("verify-all", "Run every suite on each instance");
  std::vector<std::string> files;
  verify->add_option("files", files, "Instance files")->required();

  for (auto* sub : {check, derive, cohom, deform, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify_all(files, common, out);
    const Instance inst = load_instance(file);
    if (*check) return cmd_check(inst, common, suite_names, out);
    if (*derive) return cmd_derive(inst, common, kind, out, err);
    if (*cohom) return cmd_cohomology(inst, common, point, cocycle, coboundary, out);
    if (nij.empty() && dname.empty() && equivalence.empty()) {
      throw UsageError("deform needs --nijenhuis, --deformation or --equivalence");
    }
    return cmd_deform(inst, common, nij, dname, equivalence, out);
  } catch (const InstanceSyntaxError& e) {
    err << "lsakit: " << e.path() << ": " << e.what() << " in \"" << e.text() << "\"\n";
    return 2;
  } catch (const UsageError& e) {
    err << "lsakit: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "lsakit: " << e.what() << '\n';
    const bool input = e.code() == Errc::SchemaError || e.code() == Errc::IoError ||
                       e.code() == Errc::SyntaxError || e.code() == Errc::UnknownVariable;
    return input ? 2 : 1;
  }
}

}  // namespace lsakit::cli
