#pragma once

#include <functional>

namespace dtnlab::numerics {

// Worker cap: DTNLAB_THREADS if set (clamped to [1, hardware]), else hardware.
int max_threads();

// Runs body(i) for i in [0, n) on up to max_threads() workers.  Callers store
// per-index results and reduce in index order, so output stays deterministic.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace dtnlab::numerics
