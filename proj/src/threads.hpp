#pragma once

#include <cstddef>
#include <functional>

namespace polysum {

// Worker cap from POLYSUM_THREADS (default: hardware concurrency, min 1).
unsigned worker_count();

// Runs fn(task_index) for every index in [0, task_count) across up to
// worker_count() threads. Tasks are claimed from a shared atomic counter;
// callers must make results independent of claim order.
void run_tasks(std::size_t task_count, const std::function<void(std::size_t)>& fn);

}  // namespace polysum
