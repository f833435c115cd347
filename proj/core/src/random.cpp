#include "ammroot/random.hpp"

#include <cstddef>

#include "ammroot/error.hpp"

namespace ammroot {

Natural Mt19937Source::below(const Natural& bound) {
  if (bound < 1) raise(Errc::invalid_argument, "below: bound must be positive");
  if (bound == 1) return 0;

  const std::size_t bits = boost::multiprecision::msb(bound - 1) + 1;
  const std::size_t words = (bits + 63) / 64;
  const Natural mask = (Natural(1) << bits) - 1;

  // Draw ceil(bits/64) words, mask to the bit width of bound-1 and reject
  // anything out of range; fewer than two draws on average.
  for (;;) {
    Natural value = 0;
    for (std::size_t i = 0; i < words; ++i) {
      value <<= 64;
      value |= Natural(engine_());
    }
    value &= mask;
    if (value < bound) return value;
  }
}

}  // namespace ammroot
