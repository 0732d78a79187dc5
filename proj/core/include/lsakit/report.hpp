#pragma once

#include <string>
#include <vector>

namespace lsakit {

enum class Status { Pass, Fail, Uncertified };

const char* to_string(Status s) noexcept;

/// One verified statement. Witnesses print the failing identity with both sides.
struct CheckRecord {
  std::string name;
  std::string statement;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;
};

/// "where: lhs = L, rhs = R"
std::string format_witness(const std::string& where, const std::string& lhs,
                           const std::string& rhs);

class Report {
 public:
  Report() = default;

  /// Appends a record; status is Fail iff any witness was supplied.
  CheckRecord& add(std::string name, std::string statement, std::vector<std::string> witnesses);
  CheckRecord& add(CheckRecord record);
  void append(const Report& other);
  void append(const Report& other, const std::string& prefix);

  const std::vector<CheckRecord>& records() const noexcept { return records_; }
  bool empty() const noexcept { return records_.empty(); }
  /// True iff no record failed (uncertified records do not count as failures).
  bool passed() const noexcept;
  bool has_failure() const noexcept { return !passed(); }
  const CheckRecord* find(const std::string& name) const noexcept;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace lsakit
