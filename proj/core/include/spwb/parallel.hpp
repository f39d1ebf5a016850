#pragma once

#include <cstddef>
#include <functional>

namespace spwb {

// Runs fn(i) for every i in [0, count). Results must be written to
// per-index slots so the outcome is independent of scheduling.
// threads <= 1 runs inline.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

int default_thread_count();

}  // namespace spwb
