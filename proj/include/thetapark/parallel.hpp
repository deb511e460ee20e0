#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace thetapark {

// THETA_PARK_THREADS overrides the hardware count.
int default_thread_count();

// Runs job(i) for i in [0, count) on the given number of threads.  Results
// must be written into per-index slots so the merge order is deterministic.
void parallel_for(int count, int threads, const std::function<void(int)>& job);

} // namespace thetapark
