#include "whitlocal/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "whitlocal/error.hpp"

namespace whitlocal {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

Status SuiteReport::status() const {
  bool failed = false;
  for (const auto& c : checks) {
    if (c.status == Status::Error) return Status::Error;
    if (c.status == Status::Fail) failed = true;
  }
  return failed ? Status::Fail : Status::Pass;
}

void SuiteReport::absorb(const SuiteReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.id = prefix + "/" + c.id;
    checks.push_back(std::move(c));
  }
}

void SuiteReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

CheckResult run_check(std::string id, std::string description,
                      const std::function<std::optional<std::string>()>& body) {
  CheckResult out;
  out.id = std::move(id);
  out.description = std::move(description);
  auto start = std::chrono::steady_clock::now();
  try {
    out.witness = body();
    out.status = out.witness ? Status::Fail : Status::Pass;
    if (out.witness && out.witness->empty()) out.witness = "(no detail)";
  } catch (const std::exception& e) {
    out.status = Status::Error;
    out.witness = e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + name + "' (json, csv, text)");
}

namespace {

nlohmann::ordered_json report_json(const SuiteReport& report, bool include_timings) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["status"] = status_name(c.status);
    if (c.witness) j["witness"] = *c.witness;
    if (include_timings) j["millis"] = c.millis;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["status"] = status_name(report.status());
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

nlohmann::json report_to_json(const SuiteReport& report, bool include_timings) {
  return nlohmann::json::parse(report_json(report, include_timings).dump());
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_report(const SuiteReport& report, ReportFormat format, bool include_timings) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json:
      os << report_json(report, include_timings).dump(2) << "\n";
      break;
    case ReportFormat::Csv:
      os << "suite,id,status,description,witness";
      if (include_timings) os << ",millis";
      os << "\r\n";
      for (const auto& c : report.checks) {
        os << csv_field(report.suite) << ',' << csv_field(c.id) << ',' << status_name(c.status) << ','
           << csv_field(c.description) << ',' << csv_field(c.witness.value_or(""));
        if (include_timings) os << ',' << c.millis;
        os << "\r\n";
      }
      break;
    case ReportFormat::Text: {
      std::size_t passed = 0;
      for (const auto& c : report.checks) {
        if (c.status == Status::Pass) ++passed;
        std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "ERROR";
        os << "[" << tag << "] " << c.id << ": " << c.description;
        if (include_timings) os << " (" << c.millis << " ms)";
        os << "\n";
        if (c.witness) os << "       witness: " << *c.witness << "\n";
      }
      os << "suite " << report.suite << ": " << status_name(report.status()) << " (" << passed << "/"
         << report.checks.size() << " checks passed)\n";
      break;
    }
  }
  return os.str();
}

}  // namespace whitlocal
