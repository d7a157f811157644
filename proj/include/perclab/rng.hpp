#pragma once

#include <cstdint>

namespace perclab {

// Stateless counter-based generation: every bit is a pure function of
// (seed, stream, counter), so edge states can be resampled in any order
// and replicas never share state.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  std::uint64_t z = mix64(seed + kGolden * stream + 0x8BB84B93962EACC9ULL);
  z = mix64(z ^ (counter + kGolden));
  return mix64(z + counter * 0xD1B54A32D192ED03ULL);
}

// 53-bit threshold; p == 1 maps to 2^53 which every hash value is below.
inline std::uint64_t bernoulli_threshold(double p) {
  return static_cast<std::uint64_t>(p * 9007199254740992.0);
}

inline bool bernoulli_bit(std::uint64_t hash, std::uint64_t threshold) {
  return (hash >> 11) < threshold;
}

inline double uniform_unit(std::uint64_t hash) {
  return static_cast<double>(hash >> 11) * 0x1.0p-53;
}

}  // namespace perclab
