#pragma once
#include <cstdint>

namespace slidewin::rng {

// splitmix64, used only to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// xoshiro256**. Fixed algorithm so identical seeds reproduce identical
// streams on every platform.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform draw from [0, bound) via the 128-bit multiply-shift reduction.
  // Bias is below 2^-64 per draw, far under any statistical resolution here.
  std::uint32_t bounded(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }
  std::uint64_t s_[4];
};

// Seed for trial block `block` of a run seeded with `seed`. Blocks are fixed
// size, so serial and parallel execution consume identical streams.
inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  SplitMix64 sm(seed ^ (0xA0761D6478BD642Full * (block + 1)));
  return sm.next();
}

}  // namespace slidewin::rng
