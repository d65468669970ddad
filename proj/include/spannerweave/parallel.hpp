#pragma once

#include <cstdint>
#include <functional>

namespace spannerweave {

// Worker-thread budget for the parallel helpers. Defaults to the hardware
// concurrency; the CLI overrides it from --threads / SPANNERWEAVE_THREADS.
unsigned thread_count();
void set_thread_count(unsigned n);

// Runs fn(chunk_index, begin, end) over [0, total) split into `chunks`
// contiguous ranges. Chunks run concurrently when the thread budget allows;
// callers must make any reduction independent of completion order (the
// helpers here guarantee nothing beyond "every chunk runs exactly once").
void run_chunked(std::uint64_t total, unsigned chunks,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace spannerweave
