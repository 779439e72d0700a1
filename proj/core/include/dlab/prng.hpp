#pragma once

#include <cstdint>

namespace dlab {

// Deterministic 64-bit generator (splitmix64).  Standard-library distributions
// are not specified bit-for-bit across implementations, and reruns here must be
// byte-identical, so randomized inputs are derived from this fixed recurrence.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound).  Modulo bias is irrelevant for generating
  // test inputs; determinism is what matters.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace dlab
