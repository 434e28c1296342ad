#include "superplancherel/rng.hpp"

namespace spl {

std::uint64_t SplitMix64::uniform_below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  // Largest multiple of bound representable in 64 bits; values at or above it
  // are rejected so that every residue is equally likely.
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  std::uint64_t x = (*this)();
  while (x > limit) x = (*this)();
  return x % bound;
}

}  // namespace spl
