#pragma once

#include <functional>

namespace whitlocal {

/// Calls fn(0) ... fn(count - 1) on up to `jobs` threads. Tasks are claimed
/// dynamically; callers write results into per-index slots so the outcome does
/// not depend on scheduling. If tasks throw, the exception of the lowest
/// failing index is rethrown after all workers finish.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

/// Reads WHITLOCAL_JOBS, falling back to 1 when unset or malformed.
int default_jobs();

}  // namespace whitlocal
