#pragma once

#include <cstdint>
#include <functional>

namespace rhomnk {

/// 0 -> hardware concurrency (>= 1); otherwise the requested count.
int resolve_workers(int requested);

/// Splits [0, total) into one contiguous chunk per worker and runs
/// body(lo, hi) on each. Chunks are disjoint, so bodies writing to disjoint
/// output regions need no synchronisation.
void parallel_chunks(uint64_t total, int workers,
                     const std::function<void(uint64_t, uint64_t)>& body);

/// Work pool over [0, count) task indices, pulled from an atomic counter.
void parallel_tasks(size_t count, int workers, const std::function<void(size_t)>& task);

}  // namespace rhomnk
