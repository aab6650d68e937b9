#pragma once

#include <cstddef>
#include <functional>

namespace fgbm {

// Resolves the worker count: explicit argument > FGBM_THREADS > 1.
// A value of 0 means "use hardware concurrency".
std::size_t resolve_threads(std::size_t requested);

// Runs fn(i) for i in [0, n) on `threads` workers in static blocks. Each
// index must write only to its own slots; with that discipline results are
// identical for every thread count.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace fgbm
