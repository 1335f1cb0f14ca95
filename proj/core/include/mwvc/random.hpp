#pragma once

#include <cstdint>
#include <initializer_list>

namespace mwvc::rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless stream: the draw for a given key tuple is a pure function of
/// the tuple, so any schedule of callers sees the same numbers.
constexpr std::uint64_t keyed(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = mix64(seed);
  for (auto p : parts) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

/// Uniform in [0, 1) with 53 bits of resolution.
constexpr double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform in (0, 1), never exactly 0 or 1.
constexpr double to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Uniform integer in [0, bound) via 128-bit multiply-high.
inline std::uint64_t to_range(std::uint64_t bits, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(bits) * bound) >> 64);
}

// Stream tags for keyed draws.
inline constexpr std::uint64_t kPartitionStream = 1;
inline constexpr std::uint64_t kThresholdStream = 2;
inline constexpr std::uint64_t kCentralThresholdStream = 3;

}  // namespace mwvc::rng
