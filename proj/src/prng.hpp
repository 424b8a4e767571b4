#pragma once

#include <cstdint>

namespace rcd {

// SplitMix64 finalizer. Bijective on 64-bit words.
inline constexpr uint64_t mix64(uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based generator: the draw for a given (seed, stream, counter)
// triple is a pure function of the triple, so generation order never
// affects the output and distinct streams are independent.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) noexcept
      : key_(mix64(mix64(seed) ^ stream)) {}

  uint64_t word(uint64_t counter) const noexcept {
    return mix64(key_ ^ counter);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01(uint64_t counter) const noexcept {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p, uint64_t counter) const noexcept {
    return uniform01(counter) < p;
  }

 private:
  uint64_t key_;
};

// Sequential SplitMix64 stream, for consumers that want an ordinary
// stateful generator (k-means seeding, shuffles).
class SeqRng {
 public:
  explicit SeqRng(uint64_t seed) noexcept : state_(seed) {}

  uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), n >= 1. Fixed-point multiply keeps the
  // mapping platform-independent.
  uint64_t below(uint64_t n) noexcept {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

}  // namespace rcd
