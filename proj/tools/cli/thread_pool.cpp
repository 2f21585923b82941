#include "cli/thread_pool.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace k3atlas::cli {

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Executor pool_executor(unsigned jobs) {
  return [jobs](std::size_t tasks, const std::function<void(std::size_t)> &body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), tasks);
    if (workers <= 1) {
      for (std::size_t i = 0; i < tasks; ++i) body(i);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::mutex m;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < tasks;) {
            try {
              body(i);
            } catch (...) {
              std::lock_guard lock(m);
              if (!first) first = std::current_exception();
            }
          }
        });
    }
    if (first) std::rethrow_exception(first);
  };
}

}  // namespace k3atlas::cli
