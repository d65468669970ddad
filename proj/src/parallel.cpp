#include "spannerweave/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace spannerweave {

namespace {
std::atomic<unsigned> g_threads{0};  // 0 = not set yet
}

unsigned thread_count() {
  unsigned t = g_threads.load(std::memory_order_relaxed);
  if (t == 0) {
    t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
  }
  return t;
}

void set_thread_count(unsigned n) {
  g_threads.store(n == 0 ? 1 : n, std::memory_order_relaxed);
}

void run_chunked(std::uint64_t total, unsigned chunks,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  if (chunks == 0) chunks = 1;
  if (chunks > total) chunks = static_cast<unsigned>(total);
  const std::uint64_t step = (total + chunks - 1) / chunks;

  unsigned workers = thread_count();
  if (workers <= 1 || chunks == 1) {
    for (unsigned c = 0; c < chunks; ++c) {
      std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
      if (begin >= total) break;
      fn(c, begin, std::min(total, begin + step));
    }
    return;
  }

  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (;;) {
      unsigned c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
      if (begin >= total) return;
      fn(c, begin, std::min(total, begin + step));
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min(workers, chunks);
  pool.reserve(spawn);
  for (unsigned i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace spannerweave
