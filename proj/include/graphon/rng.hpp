#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>

namespace graphon {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Collision-resistant per-trial seed: the SplitMix64 finalizer folded over
// the labels. Every fold is a bijection in the running value, so distinct
// masters with equal labels can never collide.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master, std::span<const std::uint64_t> labels) {
  std::uint64_t h = master;
  for (std::uint64_t label : labels) h = splitmix64_mix((h + kGolden) ^ label);
  return h;
}

inline std::uint64_t derive_trial_seed(std::uint64_t master, std::initializer_list<std::uint64_t> labels) {
  return derive_trial_seed(master, std::span<const std::uint64_t>(labels.begin(), labels.size()));
}

// xoshiro256** seeded by SplitMix64 state expansion. A plain value type:
// copy it to fork a deterministic replay, derive fresh seeds to decorrelate.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += kGolden;
      word = splitmix64_mix(sm);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // 53 uniform bits; the dyadic rational m / 2^53 in [0, 1).
  std::uint64_t next_bits53() { return next_u64() >> 11; }

  double next_unit() { return static_cast<double>(next_bits53()) * 0x1p-53; }

  // Box-Muller; the cosine branch of a fresh pair (u1 shifted into (0, 1]).
  double next_normal() {
    const double u1 = static_cast<double>(next_bits53() + 1) * 0x1p-53;
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace graphon
