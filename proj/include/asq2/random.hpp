#pragma once

#include <cstdint>

namespace asq2 {

/// Counter-based generator: output n is splitmix64(seed + n * golden gamma).
/// Streams are reproducible from (seed, counter) alone.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept { return at(counter_++); }

  result_type at(std::uint64_t n) const noexcept {
    std::uint64_t z = seed_ + (n + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0. The modulo bias is irrelevant for the
  /// small bounds used here.
  std::uint64_t below(std::uint64_t bound) noexcept { return (*this)() % bound; }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace asq2
