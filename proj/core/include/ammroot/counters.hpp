#pragma once

#include <cstdint>

namespace ammroot {

/// Instrumentation record filled in over the course of one extraction.
/// All four counts are monotonically non-decreasing while an extraction runs.
struct Counters {
  std::uint64_t nonresidue_trials = 0;
  std::uint64_t loop_iterations = 0;
  std::uint64_t dlog_multiplications = 0;
  std::uint64_t field_multiplications = 0;
};

/// Installs `sink` as the ambient multiplication counter for the current
/// thread. Every field multiplication performed while a scope is active is
/// attributed to the innermost sink; without one, nothing is counted.
class CounterScope {
 public:
  explicit CounterScope(Counters& sink) noexcept;
  ~CounterScope();

  CounterScope(const CounterScope&) = delete;
  CounterScope& operator=(const CounterScope&) = delete;

  static Counters* active() noexcept;

 private:
  Counters* prev_;
};

}  // namespace ammroot
