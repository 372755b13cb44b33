#pragma once

#include <cstdint>

namespace mdim {

/// The repo-wide deterministic 64-bit generator (splitmix64).
///
/// next():
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived draws, also fixed repo-wide:
///   next_below(n) = high 64 bits of next() * n   (128-bit product)
///   next_unit()   = (next() >> 11) * 2^-53       (double in [0,1))
/// Child seed i of a master seed is the (i+1)-th output of the master
/// stream: split_seed(master, i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master + index * 0x9E3779B97F4A7C15ULL);
  return g.next();
}

}  // namespace mdim
