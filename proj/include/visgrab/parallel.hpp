#pragma once

#include <cstddef>
#include <functional>

namespace visgrab {

/// Worker cap: VISGRAB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs job(0) .. job(jobs - 1) on up to `workers` threads (0 = worker_count()).
/// Jobs must write only to their own slots; results are therefore independent
/// of scheduling. The exception of the lowest-numbered failing job is rethrown.
void run_jobs(std::size_t jobs, const std::function<void(std::size_t)>& job,
              std::size_t workers = 0);

}  // namespace visgrab
