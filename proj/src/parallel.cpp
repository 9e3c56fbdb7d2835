#include "visgrab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace visgrab {

std::size_t worker_count() {
  if (const char* env = std::getenv("VISGRAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_jobs(std::size_t jobs, const std::function<void(std::size_t)>& job,
              std::size_t workers) {
  if (workers == 0) workers = worker_count();
  workers = std::min(workers, jobs);
  std::vector<std::exception_ptr> errors(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs;) {
          try {
            job(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace visgrab
