#pragma once

#include <cstdint>
#include <random>

namespace roverplan {

// splitmix64 step; used to derive decorrelated per-trial seeds from
// (base_seed, trial_index) so campaign results do not depend on thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
  return splitmix64(base_seed + 0x632be59bd9b4e019ull * (trial_index + 1));
}

// mt19937_64 wrapper with a fixed uniform mapping. std::uniform_real_distribution
// is implementation-defined, so uniform01 maps raw 64-bit draws directly to
// [0,1) with 53-bit resolution to keep traces bit-identical across toolchains.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  static RngStream for_trial(std::uint64_t base_seed, std::uint64_t trial_index) {
    return RngStream(trial_seed(base_seed, trial_index));
  }

  std::uint64_t next_u64() { return eng_(); }

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace roverplan
