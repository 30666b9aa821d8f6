#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whitlocal/rational.hpp"
#include "whitlocal/report.hpp"

namespace whitlocal {

/// Everything a subcommand needs. Fields a command does not use are ignored.
struct RunConfig {
  std::string command;
  std::optional<int> n;
  int n_max = 10;
  std::optional<int> level;
  int order = 6;
  std::optional<long> p;  // empty means the symbol q
  ReportFormat emit = ReportFormat::Json;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string suite = "all";
  std::string place = "unramified";
  std::optional<int> conductor;
  std::vector<int> valuations;
  std::vector<int> mu;
  std::string s = "s";
  std::string w = "w";
  bool bruteforce = false;
  bool timings = false;
  Rational perturbation = 0;
};

/// Sets one field from its command-line spelling ("n", "n-max", "level",
/// "order", "p", "emit", "seed", "jobs", "suite", "place", "conductor",
/// "valuations", "mu", "s", "w", "bruteforce", "timings", "perturbation", "command").
/// Throws InvalidArgument for unknown keys or malformed values.
void set_option(RunConfig& cfg, const std::string& key, const std::string& value);

struct RunResult {
  int exit_code = 0;   // 0 pass, 1 a verification failed, 2 invalid input
  std::string output;  // the report, in the requested format
  std::string diagnostic;
};

RunResult run_command(const RunConfig& cfg);

}  // namespace whitlocal
