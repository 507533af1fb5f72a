#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace hp {

// Worker count used by verifiers. Defaults to HOPF_PARTIAL_JOBS, then the
// hardware concurrency.
int jobs();
void set_jobs(int n);

// Splits [0, n) into at most jobs() contiguous chunks and runs
// body(chunk, begin, end) for each. Chunks are numbered in index order so
// callers can merge per-chunk results deterministically.
template <class Body>
int parallel_chunks(int n, Body&& body) {
  int workers = std::max(1, std::min(jobs(), n));
  if (workers <= 1) {
    if (n > 0) body(0, 0, n);
    return n > 0 ? 1 : 0;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    int begin = static_cast<int>(static_cast<long long>(n) * w / workers);
    int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return workers;
}

}  // namespace hp
