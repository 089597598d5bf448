#pragma once

#include <cstddef>
#include <functional>

namespace eigenflow {

// Worker count: EIGENFLOW_THREADS caps parallelism, 0 or unset means auto.
std::size_t worker_count();

// Runs fn(i) for i in [0, count) across workers. Each index is processed
// exactly once; callers own any ordering of results (index-addressed output
// slots keep the merge deterministic regardless of scheduling).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace eigenflow
