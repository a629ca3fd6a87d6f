#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace littlewood::detail {

/// Runs fn(begin, end) over [0, n) split into at most `workers` contiguous
/// blocks. Blocks depend only on n and workers, not on scheduling.
template <class F>
void parallel_blocks(std::uint64_t n, int workers, F&& fn) {
  if (workers < 1) workers = 1;
  if (n == 0) return;
  const std::uint64_t w = std::min<std::uint64_t>(workers, n);
  if (w == 1) {
    fn(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::uint64_t base = n / w, extra = n % w;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t end = begin + base + (i < extra ? 1 : 0);
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace littlewood::detail
