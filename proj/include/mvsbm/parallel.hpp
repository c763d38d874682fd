#pragma once

#include <cstddef>
#include <functional>

namespace mvsbm {

/// Worker count: hardware concurrency, capped by MVSBM_THREADS when set.
int worker_count();

/// Calls body(i) for every i in [begin, end). Iterations are split into
/// contiguous chunks over at most worker_count() threads; the first
/// exception thrown by any chunk is rethrown after all threads join.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace mvsbm
