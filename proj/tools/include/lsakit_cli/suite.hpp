#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsakit/report.hpp"
#include "lsakit_cli/instance.hpp"

namespace lsakit::cli {

enum class Suite { Axioms, SubAdjacent, PhaseSpace, Graded, Cohomology, Deformation };

const char* to_string(Suite s) noexcept;
std::vector<Suite> all_suites();

struct SuiteOptions {
  std::set<Suite> suites;
  std::uint64_t seed = 1;
  /// Top cochain degree for the representation complex and point cohomology.
  std::size_t max_degree = 3;
  /// Random cochains per degree in the d o d checks.
  std::size_t samples = 20;
  /// Coefficient degree of random cochains.
  unsigned coeff_degree = 1;
  bool paper_literal = false;
};

struct SuiteResult {
  Report report;
  /// Computed values that are not pass/fail (cohomology dimensions and the like).
  nlohmann::json data = nlohmann::json::object();
};

/// Runs the selected suites in a fixed order. Library errors become failing records
/// named "<prefix>error" whose witness is the error message.
SuiteResult run_suite(const Instance& inst, const SuiteOptions& options);

/// Point-case cohomology dimensions as JSON rows.
nlohmann::json cohomology_dims_json(const Instance& inst, std::size_t max_degree);

/// The representation the complexes use: the instance's own, else (A; L, 0).
Representation complex_representation(const Instance& inst);

}  // namespace lsakit::cli
