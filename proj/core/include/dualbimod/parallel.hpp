#ifndef DUALBIMOD_PARALLEL_HPP
#define DUALBIMOD_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dualbimod {

// Worker count: hardware concurrency, capped by DUALBIMOD_THREADS when set.
inline int default_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("DUALBIMOD_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Runs f(i) for i in [0, n). Results must be written to preallocated,
// index-addressed slots so the merge is deterministic regardless of
// scheduling. Exceptions propagate (first one wins).
template <class F>
void parallel_for(int n, F&& f, int threads = 0) {
  if (threads <= 0) threads = default_threads();
  if (threads == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(threads, n);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dualbimod

#endif
