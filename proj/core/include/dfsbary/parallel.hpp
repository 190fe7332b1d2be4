#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace dfsbary {

/// Number of worker threads to use for `count` independent items.
/// requested == 0 means "all hardware threads".
inline unsigned resolve_thread_count(unsigned requested, std::size_t count) {
  unsigned t = requested;
  if (t == 0) {
    t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
  }
  if (static_cast<std::size_t>(t) > count) t = count == 0 ? 1 : static_cast<unsigned>(count);
  return t;
}

/// Runs fn(begin, end) over a static contiguous partition of [0, count).
/// Each item is computed independently and written to its own slot, so the
/// numeric output does not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned t = resolve_thread_count(threads, count);
  if (count == 0) return;
  if (t <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t chunk = (count + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    const std::size_t begin = static_cast<std::size_t>(i) * chunk;
    if (begin >= count) break;
    const std::size_t end = std::min(begin + chunk, count);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dfsbary
