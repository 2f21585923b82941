#pragma once

#include "k3atlas/search.hpp"

namespace k3atlas::cli {

// Executor backed by min(jobs, tasks) worker threads pulling task indices
// from a shared counter. The first exception thrown by a task is rethrown
// after all workers join.
Executor pool_executor(unsigned jobs);

unsigned default_jobs();

}  // namespace k3atlas::cli
