#ifndef SMTWT_PARALLEL_HPP
#define SMTWT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace smtwt {

// Runs fn(index) for index in [0, count) on up to `threads` workers. Each
// index is processed exactly once; callers own any per-index state, so
// results land in pre-sized slots and output order never depends on thread
// scheduling.
template <typename Fn>
void parallel_for_index(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t index = 0; index < count; ++index) fn(index);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= count) return;
      fn(index);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
}

}  // namespace smtwt

#endif
