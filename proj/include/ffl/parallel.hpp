#pragma once

#include <cstddef>
#include <functional>

namespace ffl {

/// Worker count used by parallel_for (default 1). The CLI sets it from FFL_THREADS.
void set_thread_count(unsigned n) noexcept;
unsigned thread_count() noexcept;

/// Runs body(i) for i in [0, n). Each index writes only its own slot, so results
/// do not depend on scheduling. Exceptions are rethrown (first by index).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ffl
