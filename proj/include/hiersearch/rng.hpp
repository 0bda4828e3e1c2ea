#pragma once

#include <cstdint>
#include <random>

namespace hiersearch {

using Rng = std::mt19937_64;

// Purpose tags keep every consumer of randomness on its own stream, so the
// draw order of one component can never perturb another.
enum class StreamPurpose : std::uint64_t {
  initial_start = 1,
  terminal_agent = 2,
  random_agent = 3,
  lhs_agent = 4,
  ground_truth = 5,
  space_generator = 6,
};

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
}

// Stream for (master seed, purpose, index); independent of scheduling.
inline Rng make_stream(std::uint64_t master_seed, StreamPurpose purpose,
                       std::uint64_t index = 0) {
  const auto p = static_cast<std::uint64_t>(purpose);
  return Rng(mix_seed(mix_seed(master_seed, p), index));
}

// Uniform in [0, 1) from the top 53 bits; stable across standard libraries,
// unlike uniform_real_distribution.
inline double uniform_double(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi).
inline double uniform_in(Rng &rng, double lo, double hi) {
  return lo + uniform_double(rng) * (hi - lo);
}

} // namespace hiersearch
