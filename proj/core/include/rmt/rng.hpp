#pragma once
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace rmt {

/// Splittable random stream: the stream for (master_seed, stream_index) is a
/// pure function of both arguments, so realization k of a run can be produced
/// on any worker, in any order, with identical results.
///
/// Core generator is xoshiro256++; the state is expanded from the two seeds
/// with SplitMix64. Gaussians come from a cached Box-Muller pair, so the draw
/// sequence is fixed by the stream alone.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t master_seed, std::uint64_t stream_index = 0) {
    SplitMix64 sm{master_seed};
    const std::uint64_t base = sm.next();
    SplitMix64 expand{base ^ (stream_index * 0xda942042e4dd58b5ull)};
    for (auto& s : state_) s = expand.next();
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t bits() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log1p(-uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
      std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    }
  };

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rmt
