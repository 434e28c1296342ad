#pragma once

#include <cstdint>

namespace spl {

/// SplitMix64 (Steele, Lea, Flood 2014). Small, seedable and splittable:
/// independent streams are obtained with derive_seed().
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// The SplitMix64 output finalizer; a bijection on 64-bit words.
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; exact for every bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Seed of stream `index` under `seed`. Sample i of a batch always uses
/// derive_seed(seed, i), so batches split across workers reproduce serial runs.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::mix(SplitMix64::mix(seed ^ 0x6a09e667f3bcc909ULL) +
                         0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace spl
