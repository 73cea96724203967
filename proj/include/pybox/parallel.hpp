#pragma once

#include <exception>
#include <thread>
#include <vector>

#include "pybox/intmath.hpp"

namespace pybox {

// Splits [lo, hi) into `jobs` contiguous chunks and evaluates
// chunk_fn(chunk_lo, chunk_hi) on worker threads. Chunk results come back
// in chunk order, so merging them left to right reproduces the
// single-threaded scan exactly, whatever the worker count.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(u64 lo, u64 hi, unsigned jobs, Fn chunk_fn) {
  const u64 span = hi > lo ? hi - lo : 0;
  if (jobs == 0) jobs = 1;
  if (u64{jobs} > span && span > 0) jobs = static_cast<unsigned>(span);
  if (jobs == 1 || span == 0) return {chunk_fn(lo, hi)};

  std::vector<Result> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const u64 chunk = span / jobs;
  const u64 rem = span % jobs;
  u64 start = lo;
  for (unsigned i = 0; i < jobs; ++i) {
    const u64 stop = start + chunk + (i < rem ? 1 : 0);
    workers.emplace_back([&results, &errors, &chunk_fn, i, start, stop] {
      try {
        results[i] = chunk_fn(start, stop);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
    start = stop;
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace pybox
