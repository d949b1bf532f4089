#pragma once

#include <cstddef>
#include <functional>

namespace drinfeld {

/// Worker count used by the library; 1 runs everything on the calling thread.
void set_jobs(int jobs);
int jobs();

/// Calls fn(i) for i in [0, n), spread over jobs() threads.  Results must be
/// written to per-index slots; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace drinfeld
