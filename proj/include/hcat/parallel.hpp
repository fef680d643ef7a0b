#pragma once

#include <cstddef>
#include <functional>

namespace hcat {

/// Worker count: the HCAT_THREADS hint when set to a positive integer,
/// otherwise the hardware concurrency.
unsigned worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads in contiguous
/// blocks. Callers write into preallocated slots, so results do not depend on
/// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hcat
