// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace vlmshield {

/// Seeded random stream built on std::mt19937_64 (the engine's output
/// sequence is fixed by the standard). The uniform/normal transforms are
/// implemented here rather than with std::*_distribution so that a seed
/// produces the same draws on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 bits of mantissa.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; draws two uniforms, caches the spare.
  double normal();

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 finalizer; good avalanche for combining seed material.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a over bytes, for turning ids/tags into seed material.
std::uint64_t fnv1a64(std::string_view bytes);

/// Stable derived seed for a named substream of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  return mix64(base ^ fnv1a64(tag));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::uint64_t index) {
  return mix64(mix64(base ^ fnv1a64(tag)) + index);
}

}  // namespace vlmshield
