#pragma once

#include <cstddef>
#include <functional>

namespace graphcord {

// Worker cap: min(jobs, hardware threads, GRAPHCORD_THREADS if set).
int worker_count(std::size_t jobs);

// Runs fn(i) for i in [0, count). Work is split into contiguous stripes;
// callers keep determinism by writing only to index-addressed slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace graphcord
