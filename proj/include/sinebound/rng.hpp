#pragma once

// Counter-based deterministic RNG for audit sampling. Streams are keyed by
// (seed, cell index, draw index), so results do not depend on how work is
// scheduled across threads, and the same bits come out on every platform
// (no implementation-defined std distributions involved).

#include <cstdint>

namespace sinebound::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  return splitmix64(s);
}

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t cell, std::uint64_t draw) {
    state_ = mix_key(mix_key(seed, cell), draw);
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

 private:
  std::uint64_t state_;
};

}  // namespace sinebound::detail
