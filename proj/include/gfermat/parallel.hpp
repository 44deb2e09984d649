#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gfermat {

/// Splits [0, count) into `jobs` contiguous chunks and runs fn(begin, end, chunk)
/// on each, one thread per chunk. jobs <= 1 runs inline. The first exception
/// thrown by any chunk is rethrown after all threads have joined.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  const std::size_t step = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t begin = std::min(count, j * step);
    const std::size_t end = std::min(count, begin + step);
    threads.emplace_back([&, begin, end, j] {
      try {
        fn(begin, end, j);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace gfermat
