#include "zetalab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace zetalab {

unsigned resolve_threads(const Parallel& par) {
  unsigned n = par.threads != 0 ? par.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ZETALAB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // unparsable cap is ignored
    }
  }
  return std::max(1u, n);
}

void run_tasks(std::size_t ntasks, const Parallel& par,
               const std::function<void(std::size_t)>& body) {
  if (ntasks == 0) return;
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(par), ntasks));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < ntasks; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= ntasks || failed.load(std::memory_order_relaxed)) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace zetalab
