#pragma once

#include <string>

#include "json.hpp"
#include "lsakit_cli/instance.hpp"
#include "lsakit_cli/suite.hpp"

namespace lsakit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// One instance's report: tool, version, instance name and digest, command, overall
/// status, summary counts, records in execution order, and data when present.
nlohmann::json report_json(const Instance& inst, const std::string& command,
                           const SuiteResult& result);
/// Human view: one line per record, failing ones followed by statement and witnesses.
std::string report_text(const nlohmann::json& report);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace lsakit::cli
