#pragma once

#include <cstddef>
#include <functional>

namespace hpq {

/// Worker count resolved from HPQ_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs body(i) for i in [0, n). Work is split by index blocks; every
/// invocation writes only to its own outputs, so results are bit-identical
/// for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace hpq
