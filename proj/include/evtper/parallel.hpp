// Deterministic work splitting: results depend only on the index mapping,
// never on the worker count. EVTPER_THREADS caps the pool size.
#pragma once

#include <functional>

namespace evtper {

// Worker count: EVTPER_THREADS when set (min 1), else hardware concurrency.
int worker_count();

// Runs fn(0..count-1); the callable must write to disjoint slots.
void parallel_for(long count, const std::function<void(long)>& fn);

}  // namespace evtper
