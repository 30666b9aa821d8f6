#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace whitlocal {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s) noexcept;

struct CheckResult {
  std::string id;
  std::string description;
  Status status = Status::Pass;
  std::optional<std::string> witness;  // present iff status != Pass
  double millis = 0.0;
};

/// Verdict record for one verification suite. The suite status is derived:
/// pass iff every check passes, error if any check raised.
struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  Status status() const;
  bool passed() const { return status() == Status::Pass; }

  /// Appends the checks of another report with ids prefixed by "<prefix>/"
  /// (unchanged for an empty prefix).
  void absorb(const SuiteReport& other, const std::string& prefix);
  void sort_checks();
};

/// Runs one check, timing it. The body returns a witness string on failure and
/// std::nullopt on success; a thrown exception yields an Error check.
CheckResult run_check(std::string id, std::string description,
                      const std::function<std::optional<std::string>()>& body);

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(const std::string& name);

/// Stable serialization. Timings are omitted unless requested, so that equal
/// inputs give byte-identical output.
std::string emit_report(const SuiteReport& report, ReportFormat format, bool include_timings = false);
nlohmann::json report_to_json(const SuiteReport& report, bool include_timings = false);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

}  // namespace whitlocal
