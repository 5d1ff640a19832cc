#pragma once

#include <cstddef>
#include <functional>

namespace qpl {

// Worker count from the QPL_WORKERS environment variable, defaulting to 1.
int env_worker_count();

// Splits [0, count) into contiguous chunks, one per worker, and runs
// fn(worker_index, begin, end) on each. Runs inline when workers <= 1 or the
// range is small. Results must be reduced deterministically by the caller.
void run_chunked(std::size_t count, int workers,
                 const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace qpl
