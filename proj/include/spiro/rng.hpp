#pragma once

#include <cstdint>
#include <limits>

namespace spiro::rng {

// Stream algorithm: SplitMix64 (Steele, Lea, Flood 2014). Output k of the
// stream seeded with s is mix64(s + (k + 1) * kGamma), so any position can be
// computed directly and blocks can be filled in parallel lanes.
inline constexpr const char* kAlgorithmId = "splitmix64-v1";
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t k) noexcept {
  return mix64(seed + (k + 1) * kGamma);
}

// Seed of replication `rep` under master seed `seed`: seed XOR output #rep of
// the stream seeded with zero. Independent of how replications are scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t rep) noexcept {
  return seed ^ at(0, rep);
}

// Top 53 bits of a raw output; uniform(raw) = mantissa53(raw) * 2^-53 in [0, 1).
constexpr std::uint64_t mantissa53(std::uint64_t raw) noexcept { return raw >> 11; }

inline double uniform(std::uint64_t raw) noexcept {
  return static_cast<double>(mantissa53(raw)) * 0x1.0p-53;
}

// Sequential URBG over the same stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ += kGamma;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

}  // namespace spiro::rng
