#pragma once

#include <cstdint>
#include <random>

namespace wfuse {

// SplitMix64 finalizer. Run i of a batch seeded with s uses
// RandomStream(mix64(s + i)) (addition wraps modulo 2^64).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic uniform stream on top of std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Uniforms are the top 53 bits of one
// engine output, so the stream replays bit-exactly on any conforming
// implementation (std::uniform_real_distribution does not).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream for_run(std::uint64_t master_seed, std::uint64_t run) {
    return RandomStream(mix64(master_seed + run));
  }

  std::uint64_t next_bits53() { return engine_() >> 11; }
  double next_uniform();

 private:
  std::mt19937_64 engine_;
};

}  // namespace wfuse
