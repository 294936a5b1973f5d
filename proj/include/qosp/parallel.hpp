#pragma once

#include <cstddef>
#include <functional>

namespace qosp {

/// Worker count from QOSP_THREADS (default 1, clamped to [1, 64]).
unsigned thread_count();

/// Runs body(i) for i in [0, n) over contiguous blocks. Each index is
/// handled by exactly one worker, so results are schedule independent as
/// long as body(i) only writes slot i.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace qosp
