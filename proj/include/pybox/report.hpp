#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "pybox/intmath.hpp"

namespace pybox {

// Outcome summary shared by the exhaustive searches and verifiers. The
// elapsed time is a diagnostic only; canonical output never includes it,
// which keeps repeated runs byte-identical.
struct SearchReport {
  std::string scope;  // human-readable bound semantics, e.g. "square-base boxes, edges <= bound"
  u64 bound = 0;
  u64 count = 0;
  std::optional<u64> min_t;  // smallest inner diagonal among matches, when any
  double elapsed_ms = 0.0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pybox
