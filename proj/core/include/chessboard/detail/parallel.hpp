#pragma once

#include <cstddef>
#include <functional>

namespace chessboard::detail {

/// Worker budget: CHESSBOARD_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_budget();

/// Runs fn(begin, end) over [0, total) split into contiguous chunks, at most
/// thread_budget() of them in flight.  Chunks are disjoint, so callers can
/// write results into a preallocated buffer and output order stays canonical
/// no matter how many workers ran.
void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace chessboard::detail
