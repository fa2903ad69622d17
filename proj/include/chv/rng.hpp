#pragma once
#include <cstdint>

namespace chv {

// SplitMix64 step; used to expand a 64-bit seed into generator state.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** (Blackman/Vigna). Chosen over std::mt19937_64 so that the
// stream is pinned by this file rather than by a library implementation:
// reports must be byte-identical across platforms for a given seed.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed);

  std::uint64_t next();

  // Uniform value in [0, n) by rejection; n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform integer in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi);

 private:
  std::uint64_t s_[4];
};

}  // namespace chv
