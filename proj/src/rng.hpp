#pragma once

#include <cstdint>

namespace riscov::rng {

// Counter-based generator: draw i of a stream is a pure function of
// (seed, i), so any partition of the index range across workers reproduces
// the serial sequence bit for bit. Finalizer from splitmix64; period 2^64
// per seed.
inline constexpr const char* kAlgorithm = "splitmix64-v1";

inline std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(at(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace riscov::rng
