#include "rhomnk/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rhomnk {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// run fn on `count` threads, rethrowing the first captured exception
void run_threads(int count, const std::function<void(int)>& fn) {
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(count);
  for (int t = 0; t < count; ++t) {
    threads.emplace_back([&, t] {
      try {
        fn(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void parallel_chunks(uint64_t total, int workers,
                     const std::function<void(uint64_t, uint64_t)>& body) {
  workers = resolve_workers(workers);
  if (total == 0) return;
  if (workers == 1 || total < 2) {
    body(0, total);
    return;
  }
  const uint64_t w = static_cast<uint64_t>(workers);
  const uint64_t chunk = (total + w - 1) / w;
  run_threads(workers, [&](int t) {
    const uint64_t lo = chunk * static_cast<uint64_t>(t);
    if (lo >= total) return;
    const uint64_t hi = std::min(total, lo + chunk);
    body(lo, hi);
  });
}

void parallel_tasks(size_t count, int workers, const std::function<void(size_t)>& task) {
  workers = resolve_workers(workers);
  if (count == 0) return;
  if (workers == 1 || count == 1) {
    for (size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<size_t> next{0};
  run_threads(workers, [&](int) {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      task(i);
    }
  });
}

}  // namespace rhomnk
