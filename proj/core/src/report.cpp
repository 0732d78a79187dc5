#include "lsakit/report.hpp"

namespace lsakit {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Uncertified: return "uncertified";
  }
  return "fail";
}

std::string format_witness(const std::string& where, const std::string& lhs,
                           const std::string& rhs) {
  return where + ": lhs = " + lhs + ", rhs = " + rhs;
}

CheckRecord& Report::add(std::string name, std::string statement,
                         std::vector<std::string> witnesses) {
  CheckRecord r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.status = witnesses.empty() ? Status::Pass : Status::Fail;
  r.witnesses = std::move(witnesses);
  records_.push_back(std::move(r));
  return records_.back();
}

CheckRecord& Report::add(CheckRecord record) {
  records_.push_back(std::move(record));
  return records_.back();
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto r : other.records_) {
    r.name = prefix + r.name;
    records_.push_back(std::move(r));
  }
}

bool Report::passed() const noexcept {
  for (const auto& r : records_) {
    if (r.status == Status::Fail) return false;
  }
  return true;
}

const CheckRecord* Report::find(const std::string& name) const noexcept {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace lsakit
