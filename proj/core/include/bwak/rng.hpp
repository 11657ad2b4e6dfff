#pragma once

#include <cstdint>
#include <random>

namespace bwak {

/// All randomness in the library flows from std::mt19937_64 engines. Engines
/// are seeded through SplitMix64 so that per-trial and per-stream seeds derived
/// from one master seed are decorrelated yet reproducible.
using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Named sub-streams of a trial.
enum class Stream : std::uint64_t { kEnvironment = 1, kPolicy = 2 };

/// hash(master, trial): seed of one trial.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t stream_seed(std::uint64_t trial_seed, Stream stream) {
  return splitmix64(trial_seed ^ splitmix64(static_cast<std::uint64_t>(stream)));
}

/// Uniform double in [0, 1) with 53 random bits; independent of the
/// standard library's distribution implementation.
inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace bwak
