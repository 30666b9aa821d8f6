#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whitlocal/rational.hpp"
#include "whitlocal/report.hpp"

namespace whitlocal {

struct SuiteOptions {
  int n_max = 10;                    // largest rank in the involution suite
  int order = 6;                     // truncation order of the lattice sums
  std::optional<long> p;             // residue cardinality; symbolic q when empty
  std::uint64_t seed = 1;            // randomized cocharacters
  int jobs = 1;
  Rational perturbation = 0;         // added to s' in the involution suite; nonzero must fail
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Checks run as independent tasks on `jobs` threads and
/// are sorted by id afterwards, so the report is the same for every job count.
/// "all" prefixes every id with its suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace whitlocal
