#pragma once

#include <cstddef>
#include <functional>

namespace bfi {

/// Worker count: BFI_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Run body(begin, end) over contiguous chunks of [0, n). Chunks never share
/// indices, so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace bfi
