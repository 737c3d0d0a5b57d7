#include "threads.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace polysum {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("POLYSUM_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    } catch (...) {
      // unparsable value: keep the hardware default
    }
  }
  return hw;
}

void run_tasks(std::size_t task_count,
               const std::function<void(std::size_t)>& fn) {
  if (task_count == 0) return;
  unsigned workers = worker_count();
  if (workers <= 1 || task_count == 1) {
    for (std::size_t i = 0; i < task_count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= task_count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(
      std::min<std::size_t>(workers, task_count));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace polysum
