#pragma once

#include <cstddef>
#include <functional>

namespace nlsdbar {

/// Worker count: set_thread_count() override, else $NLSDBAR_THREADS, else
/// hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, n). Each index writes only its own output slot,
/// so results do not depend on the number of workers. The first exception
/// thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nlsdbar
