#pragma once

#include <cstddef>
#include <functional>

namespace formdual {

// Worker count: FORMDUAL_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n). Bodies must only write to disjoint state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace formdual
