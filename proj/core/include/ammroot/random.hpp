#pragma once

#include <cstdint>
#include <random>

#include "ammroot/natural.hpp"

namespace ammroot {

/// Seedable randomness abstraction. The library never reaches for ambient
/// entropy; every randomized routine takes one of these. Not safe to share
/// one instance across threads.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform draw from [0, bound). bound must be positive.
  virtual Natural below(const Natural& bound) = 0;
};

/// Default source. Identical seeds give identical draw sequences on every
/// platform (mt19937_64 output plus masked rejection sampling).
class Mt19937Source final : public RandomSource {
 public:
  explicit Mt19937Source(std::uint64_t seed) : engine_(seed) {}

  Natural below(const Natural& bound) override;

 private:
  std::mt19937_64 engine_;
};

}  // namespace ammroot
