#include "lsakit_cli/output.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace lsakit::cli {

using nlohmann::json;

json report_json(const Instance& inst, const std::string& command, const SuiteResult& result) {
  json out;
  out["tool"] = "lsakit";
  out["version"] = kToolVersion;
  out["command"] = command;
  out["instance"] = {{"name", inst.name}, {"digest", "fnv1a64:" + inst.digest}};
  std::size_t pass = 0, fail = 0, uncertified = 0;
  json records = json::array();
  for (const auto& rec : result.report.records()) {
    switch (rec.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::Uncertified: ++uncertified; break;
    }
    records.push_back({{"name", rec.name},
                       {"statement", rec.statement},
                       {"status", to_string(rec.status)},
                       {"witnesses", rec.witnesses}});
  }
  out["status"] = fail == 0 ? "pass" : "fail";
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"uncertified", uncertified}};
  out["records"] = std::move(records);
  if (!result.data.empty()) out["data"] = result.data;
  return out;
}

std::string report_text(const json& report) {
  std::ostringstream os;
  os << "instance " << report["instance"]["name"].get<std::string>() << " ("
     << report["instance"]["digest"].get<std::string>() << ")\n";
  for (const auto& rec : report["records"]) {
    const auto status = rec["status"].get<std::string>();
    std::string tag = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "UNCERTIFIED";
    os << "  " << std::left << std::setw(12) << tag << rec["name"].get<std::string>() << '\n';
    if (status == "pass") continue;
    os << "      " << rec["statement"].get<std::string>() << '\n';
    for (const auto& w : rec["witnesses"]) os << "      - " << w.get<std::string>() << '\n';
  }
  if (report.contains("data") && report["data"].contains("cohomology")) {
    const json& c = report["data"]["cohomology"];
    os << "  cohomology (rep rank " << c["representation_rank"] << "): dim C^0 = " << c["dim_C0"]
       << ", dim ker d|C^0 = " << c["dim_ker_d0"] << '\n';
    for (const auto& row : c["rows"]) {
      os << "    k=" << row["degree"] << "  C=" << row["dim_C"] << "  Z=" << row["dim_Z"]
         << "  B=" << row["dim_B"] << "  H=" << row["dim_H"] << '\n';
    }
  }
  const json& s = report["summary"];
  os << "  " << report["status"].get<std::string>() << ": " << s["pass"] << " pass, " << s["fail"]
     << " fail, " << s["uncertified"] << " uncertified\n";
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace lsakit::cli
