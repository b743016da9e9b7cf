#pragma once

// Internal helper: run fn(chunk_index, begin, end) over [begin, end)
// split into contiguous chunks, one thread per chunk.  Exceptions are
// collected and the first one rethrown on the caller's thread.

#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "zrings/arith.hpp"

namespace zrings::detail {

inline void parallel_chunks(u64 begin, u64 end, unsigned jobs,
                            const std::function<void(unsigned, u64, u64)>& fn) {
  if (end <= begin) return;
  const u64 count = end - begin;
  if (jobs <= 1 || count == 1) {
    fn(0, begin, end);
    return;
  }
  const unsigned chunks = static_cast<unsigned>(std::min<u64>(jobs, count));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    const u64 lo = begin + count * c / chunks;
    const u64 hi = begin + count * (c + 1) / chunks;
    threads.emplace_back([&, c, lo, hi] {
      try {
        fn(c, lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace zrings::detail
