#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace uif {

// SplitMix64 (Steele-Lea-Flood).  The generator, the rejection rule for
// bounded draws, and the subset-sampling procedure below are all part of the
// output contract: seeded reports must replay byte-identically, including
// across reimplementations in other languages.
//
//   state' = state + 0x9E3779B97F4A7C15
//   z = state'; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB; output z ^ (z >> 31)
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, m): reject r < 2^64 mod m, return r mod m.
  std::uint64_t below(std::uint64_t m) {
    const std::uint64_t cut = (~m + 1) % m;  // 2^64 mod m
    std::uint64_t r = next();
    while (r < cut) r = next();
    return r % m;
  }

  // Sorted h-subset of {1..u}: partial Fisher-Yates over the identity array,
  // keeping the first h entries.
  std::vector<std::uint32_t> sample_subset(std::uint32_t u, std::uint32_t h) {
    std::vector<std::uint32_t> a(u);
    std::iota(a.begin(), a.end(), 1u);
    for (std::uint32_t i = 0; i < h; ++i) {
      auto j = i + static_cast<std::uint32_t>(below(u - i));
      std::swap(a[i], a[j]);
    }
    a.resize(h);
    std::sort(a.begin(), a.end());
    return a;
  }
};

// Trial t of a seeded experiment runs on its own stream so trials stay
// independent of evaluation order: seed_t = SplitMix64(seed + (t+1)*gamma).next().
inline std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ull).next();
}

}  // namespace uif
