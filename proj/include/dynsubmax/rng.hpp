#pragma once

#include <cstdint>
#include <random>

namespace dynsubmax {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Independent seed for stream `stream_id` derived from a master seed, so
// parallel instances are reproducible in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::int64_t stream_id) {
  std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(stream_id + 0x7F4A7C15));
  splitmix64(s);
  return splitmix64(s);
}

// Unbiased draw from [0, n). Avoids std::uniform_int_distribution, whose
// output is implementation-defined; reports must be reproducible across
// standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// True with probability exactly 1/n.
inline bool one_in(Rng& rng, std::uint64_t n) {
  return uniform_below(rng, n) == 0;
}

}  // namespace dynsubmax
