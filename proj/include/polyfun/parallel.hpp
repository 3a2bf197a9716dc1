#pragma once

// Deterministic work splitting. A job over [0, total) is cut into one chunk
// per worker at fixed boundaries; chunk results are merged in chunk order.
// Any answer must therefore be independent of the worker count, and callers
// keep budget decisions out of the chunks (they are made from sizes known
// up front, never from timing).

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace polyfun {

// Worker count: explicit request, else POLYFUN_WORKERS, else the hardware.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLYFUN_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(begin, end, slot) over an even partition of [0, total); merge is
// applied to the slots in chunk order.
template <class T, class Fn, class Merge>
T parallel_reduce(std::size_t total, int workers, Fn fn, Merge merge) {
  workers = resolve_workers(workers);
  std::size_t chunks = static_cast<std::size_t>(workers);
  if (chunks > total) chunks = total ? total : 1;

  std::vector<T> slots(chunks);
  if (chunks <= 1) {
    fn(static_cast<std::size_t>(0), total, slots[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    std::size_t step = total / chunks, extra = total % chunks, begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t end = begin + step + (c < extra ? 1 : 0);
      pool.emplace_back([&, begin, end, c] { fn(begin, end, slots[c]); });
      begin = end;
    }
    for (auto& t : pool) t.join();
  }

  T out = std::move(slots[0]);
  for (std::size_t c = 1; c < slots.size(); ++c) merge(out, slots[c]);
  return out;
}

}  // namespace polyfun
