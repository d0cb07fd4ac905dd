#pragma once

#include <cmath>
#include <cstdint>

namespace fdlab {

// splitmix64: used only to expand seeds into full generator states.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Small, fast counter-seedable generator (xoshiro256++).
///
/// Streams are keyed explicitly, e.g. by (seed, particle index, step),
/// so results do not depend on how work is partitioned across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { reseed(seed); }
  Rng(std::uint64_t seed, std::uint64_t key1, std::uint64_t key2 = 0) {
    std::uint64_t mix = seed;
    (void)splitmix64(mix);
    mix ^= 0x6a09e667f3bcc909ULL + key1;
    (void)splitmix64(mix);
    mix ^= 0xbb67ae8584caa73bULL + key2;
    reseed(mix);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0,1], safe as argument of log().
  double uniform_pos() { return 1.0 - uniform(); }

  double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  /// Random sign, +1 or -1.
  double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  void reseed(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
    // avoid the all-zero state
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }
  std::uint64_t s_[4];
};

}  // namespace fdlab
