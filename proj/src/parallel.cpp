#include "qosp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qosp {

unsigned thread_count() {
  const char* env = std::getenv("QOSP_THREADS");
  if (env == nullptr) return 1;
  try {
    long v = std::stol(env);
    return static_cast<unsigned>(std::clamp(v, 1L, 64L));
  } catch (const std::exception&) {
    return 1;
  }
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
  unsigned workers = std::min<size_t>(thread_count(), n);
  if (workers <= 1 || n < 64) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  size_t block = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    size_t lo = w * block;
    size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qosp
