#pragma once

#include <cstdint>

namespace mm {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based generator: draw i of stream (seed, stream) is
// mix64(key + i*gamma) with key a hash of the pair. Any stream can be opened
// directly from its index, so replicate r of a simulation is seeded
// independently of how replicates are scheduled across threads.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed + kGoldenGamma) ^
             mix64(stream * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull)) {}

  std::uint64_t next_u64() {
    counter_ += kGoldenGamma;
    return mix64(key_ + counter_);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound) via widening multiply
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt + kGoldenGamma));
}

}  // namespace mm
