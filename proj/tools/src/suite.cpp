#include "lsakit_cli/suite.hpp"

#include <functional>

#include "lsakit/cohomology.hpp"
#include "lsakit/constructions.hpp"
#include "lsakit/deformations.hpp"
#include "lsakit/multivector.hpp"
#include "lsakit/phase_space.hpp"
#include "lsakit/random.hpp"

namespace lsakit::cli {

using nlohmann::json;

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Axioms: return "axioms";
    case Suite::SubAdjacent: return "sub-adjacent";
    case Suite::PhaseSpace: return "phase-space";
    case Suite::Graded: return "graded";
    case Suite::Cohomology: return "cohomology";
    case Suite::Deformation: return "deformation";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::Axioms,  Suite::SubAdjacent, Suite::PhaseSpace,
          Suite::Graded,  Suite::Cohomology,  Suite::Deformation};
}

namespace {

/// Runs one block; a thrown library error becomes a failing record.
void guarded(Report& report, const std::string& prefix, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    report.add(prefix + "error", "construction completes", {e.what()});
  }
}

void axioms(const Instance& inst, Report& report) {
  const LSAlgebroid& a = inst.algebroid;
  report.append(check_left_symmetric(a), "axioms/");
  if (a.is_point()) report.append(lie_admissible_report(a), "axioms/");
}

void sub_adjacent_suite(const Instance& inst, Report& report) {
  const LSAlgebroid& a = inst.algebroid;
  guarded(report, "sub-adjacent/", [&] {
    const LieAlgebroid l = sub_adjacent(a);
    report.append(check_lie_algebroid(l), "sub-adjacent/lie/");
    const Representation left = build_left_mult_rep(a);
    report.append(representation_lie_report(l, left), "sub-adjacent/left-rep/");
    report.append(representation_lsa_report(a, left), "sub-adjacent/left-rep-lsa/");
    if (a.is_point()) report.append(right_multiplication_report(a), "sub-adjacent/right-mult/");
  });
  if (inst.representation) {
    guarded(report, "representation/", [&] {
      const Report rep_report = representation_lsa_report(a, *inst.representation);
      report.append(rep_report, "representation/");
      if (rep_report.passed()) {
        report.append(derived_reps(a, *inst.representation).report, "representation/derived/");
      }
    });
  }
  if (inst.kernel_frame) {
    guarded(report, "kernel/",
            [&] { report.append(kernel_representations(a, *inst.kernel_frame), "kernel/"); });
  }
  auto t = inst.endomorphisms.find("T");
  if (t != inst.endomorphisms.end() && inst.representation) {
    guarded(report, "o-operator/", [&] {
      const LieAlgebroid l = sub_adjacent(a);
      const OOperatorResult o = apply_O_operator(l, *inst.representation, t->second);
      report.append(o.report, "o-operator/");
      if (o.is_O) {
        report.append(lie_nijenhuis_report(semidirect_lie(l, *inst.representation),
                                           o_operator_lift(t->second)),
                      "o-operator/lift/");
      }
    });
  }
  if (inst.action) {
    guarded(report, "action/", [&] {
      const LSAlgebroid act = action_algebroid(a, inst.action->fields, inst.action->coordinates);
      report.append(check_left_symmetric(act), "action/");
    });
  }
}

void phase_space_suite(const Instance& inst, Report& report) {
  const LSAlgebroid& a = inst.algebroid;
  guarded(report, "phase-space/", [&] {
    const PhaseSpace ps = build_phase_space(a);
    report.append(ps.report, "phase-space/");
    report.append(paracomplex_report(ps.P, canonical_paracomplex(a.rank(), a.nvars())),
                  "phase-space/paracomplex/");
    const PhaseLSA back = lsa_from_phase(sub_adjacent(a), build_left_mult_rep(a));
    report.append(back.report, "phase-space/converse/");
    std::vector<std::string> witnesses;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < a.rank(); ++j) {
        if (back.lsa.product(i, j) != a.product(i, j)) {
          witnesses.push_back(format_witness(frame_label({i, j}),
                                             back.lsa.product(i, j).to_string(a.coords()),
                                             a.product(i, j).to_string(a.coords())));
        }
      }
    }
    report.add("phase-space/round-trip", "product recovered from (G(A); L) equals the original",
               std::move(witnesses));
  });
  if (inst.bilinear_form) {
    guarded(report, "quadratic/", [&] {
      const QuadraticReport q = quadratic_report(a, *inst.bilinear_form);
      report.append(q.report, "quadratic/");
      if (q.quadratic) {
        report.append(build_complex_structure(a, *inst.bilinear_form).report, "complex/");
      }
      if (inst.kernel_frame) {
        report.append(quadratic_kernel_report(a, *inst.bilinear_form, *inst.kernel_frame),
                      "quadratic/kernel/");
      }
    });
  }
  auto phi = inst.endomorphisms.find("phi");
  if (phi != inst.endomorphisms.end()) {
    guarded(report, "phase-space/iso/", [&] {
      report.append(phase_iso_from_lsa_iso(a, a, phi->second).report, "phase-space/iso/");
    });
  }
}

void graded_suite(const Instance& inst, const SuiteOptions& options, Report& report) {
  guarded(report, "graded/", [&] {
    SampleSpec sampling;
    sampling.seed = options.seed;
    report.append(check_graded_properties(inst.algebroid, sampling), "graded/");
  });
}

/// Failing samples listed per record; one is enough to fail it.
constexpr std::size_t kMaxWitnesses = 5;

std::string sample_witness(std::size_t sample, const std::string& what) {
  return "sample " + std::to_string(sample + 1) + ": " + what;
}

void cohomology_suite(const Instance& inst, const SuiteOptions& options, Report& report,
                      json& data) {
  const LSAlgebroid& a = inst.algebroid;
  RandomSource rng(options.seed);
  guarded(report, "cohomology/rep/", [&] {
    const Representation rep = complex_representation(inst);
    if (!check_representation_lsa(a, rep)) {
      throw Error(Errc::NotARepresentation, "the complex needs a representation");
    }
    if (a.is_point()) {
      // Degree 0 runs over a basis of C^0.
      const PointCohomology dims = point_cohomology_dims(a, rep, 0);
      std::vector<std::string> witnesses;
      for (std::size_t c = 0; c < dims.c0_basis.size(); ++c) {
        const Section& e = dims.c0_basis[c];
        const RepCochain dde = rep_d_unchecked(a, rep, rep_d0(a, rep, e));
        if (!dde.is_zero()) {
          witnesses.push_back("C^0 basis vector " + e.to_string(a.coords()) + ": d(d e) != 0");
        }
      }
      report.add("cohomology/rep/dd-degree-0", "d(d e) = 0 for e in C^0", std::move(witnesses));
    }
    for (std::size_t k = 1; k <= options.max_degree; ++k) {
      std::vector<std::string> witnesses;
      for (std::size_t s = 0; s < options.samples; ++s) {
        const RepCochain w =
            rng.rep_cochain(a.rank(), rep.rank, k, a.nvars(), options.coeff_degree);
        const RepCochain ddw = rep_d_unchecked(a, rep, rep_d_unchecked(a, rep, w));
        if (!ddw.is_zero() && witnesses.size() < kMaxWitnesses) {
          const auto& [key, value] = *ddw.components().begin();
          IndexTuple idx = key.first;
          idx.push_back(key.second);
          witnesses.push_back(sample_witness(
              s, format_witness(frame_label(idx), value.to_string(a.coords()), "0")));
        }
      }
      report.add("cohomology/rep/dd-degree-" + std::to_string(k),
                 "rep_d(rep_d w) = 0 on seeded random cochains", std::move(witnesses));
    }
  });
  guarded(report, "cohomology/def/", [&] {
    for (std::size_t k = 1; k <= 2; ++k) {
      std::vector<std::string> witnesses;
      for (std::size_t s = 0; s < options.samples; ++s) {
        const MultiDerivation d = rng.multiderivation(a.rank(), k, a.nvars(), options.coeff_degree);
        const MultiDerivation ddd = def_d(a, def_d(a, d));
        if (witnesses.size() >= kMaxWitnesses) {
          continue;
        } else if (!ddd.values().empty()) {
          const auto& [key, value] = *ddd.values().begin();
          IndexTuple idx = key.first;
          idx.push_back(key.second);
          witnesses.push_back(sample_witness(
              s, format_witness("value " + frame_label(idx), value.to_string(a.coords()), "0")));
        } else if (!ddd.symbols().empty()) {
          const auto& [key, field] = *ddd.symbols().begin();
          witnesses.push_back(sample_witness(
              s, format_witness("symbol " + frame_label(key), field.to_string(a.coords()), "0")));
        }
      }
      report.add("cohomology/def/dd-degree-" + std::to_string(k),
                 "d_def(d_def D) = 0, values and symbols, on seeded random multiderivations",
                 std::move(witnesses));
    }
  });
  if (a.is_point()) {
    guarded(report, "cohomology/point/",
            [&] { data["cohomology"] = cohomology_dims_json(inst, options.max_degree); });
  }
}

void deformation_suite(const Instance& inst, const SuiteOptions& options, Report& report) {
  const LSAlgebroid& a = inst.algebroid;
  for (const auto& [name, n] : inst.endomorphisms) {
    if (name.empty() || name[0] != 'N') continue;
    const std::string prefix = "deformation/" + name + "/";
    guarded(report, prefix, [&] {
      const Report nij = nijenhuis_report(a, n, options.paper_literal);
      report.append(nij, prefix);
      if (!check_nijenhuis(a, n)) return;
      const TrivialDeformation td = trivial_deformation(a, n);
      report.append(td.report, prefix + "trivial/");
      const MultiDerivation zero(a.rank(), 2, a.nvars());
      report.append(check_equivalence(a, td.omega, zero, n), prefix + "equivalence/");
      std::vector<std::string> witnesses;
      const std::size_t t = td.formal.nvars() - 1;
      for (const Rational& t0 : {Rational(2), Rational(-1, 2)}) {
        if (!(specialize(td.formal, t, t0).table() ==
              deformed_algebroid_unchecked(a, td.omega, t0).table())) {
          witnesses.push_back("t = " + t0.get_str() + ": specialized formal table differs");
        }
      }
      report.add(prefix + "specialization", "formal A_t at t0 equals A_t0", std::move(witnesses));
    });
  }
  for (const auto& [name, w] : inst.deformations) {
    const std::string prefix = "deformation/" + name + "/";
    guarded(report, prefix, [&] { report.append(check_deformation(a, w), prefix); });
  }
}

}  // namespace

Representation complex_representation(const Instance& inst) {
  if (inst.representation) return *inst.representation;
  return build_left_mult_rep(inst.algebroid);
}

json cohomology_dims_json(const Instance& inst, std::size_t max_degree) {
  const Representation rep = complex_representation(inst);
  const PointCohomology dims = point_cohomology_dims(inst.algebroid, rep, max_degree);
  json out;
  out["representation_rank"] = rep.rank;
  out["dim_C0"] = dims.dim_c0;
  out["dim_ker_d0"] = dims.dim_c0_kernel;
  json rows = json::array();
  for (const auto& row : dims.rows) {
    rows.push_back({{"degree", row.degree},
                    {"dim_C", row.dim_cochains},
                    {"dim_Z", row.dim_cocycles},
                    {"dim_B", row.dim_coboundaries},
                    {"dim_H", row.dim_cohomology}});
  }
  out["rows"] = std::move(rows);
  return out;
}

SuiteResult run_suite(const Instance& inst, const SuiteOptions& options) {
  SuiteResult out;
  for (Suite s : all_suites()) {
    if (!options.suites.count(s)) continue;
    switch (s) {
      case Suite::Axioms: axioms(inst, out.report); break;
      case Suite::SubAdjacent: sub_adjacent_suite(inst, out.report); break;
      case Suite::PhaseSpace: phase_space_suite(inst, out.report); break;
      case Suite::Graded: graded_suite(inst, options, out.report); break;
      case Suite::Cohomology: cohomology_suite(inst, options, out.report, out.data); break;
      case Suite::Deformation: deformation_suite(inst, options, out.report); break;
    }
  }
  return out;
}

}  // namespace lsakit::cli
