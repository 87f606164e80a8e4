#pragma once

#include <cstdint>

namespace kpartite {

// Deterministic randomness, identical on every platform and compiler.
//
// Everything derives from the splitmix64 finalizer. Generators use it in
// counter mode: value i of stream (seed) is split_mix64(seed', i) for a
// fixed per-purpose seed derivation, so any edge's coin flip can be
// recomputed independently of the others.

inline std::uint64_t split_mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stateless hash of (seed, counter). Used for per-edge coin flips.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  return split_mix64(split_mix64(seed) ^ split_mix64(counter));
}

// Sequential stream over the same construction, for the few places that
// want "next value" semantics (sampling without replacement).
class SplitMix64Stream {
 public:
  explicit SplitMix64Stream(std::uint64_t seed) : state_(split_mix64(seed)) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Uniform draw from [0, bound) by rejection; avoids the modulo bias and
  // is bit-for-bit reproducible everywhere (std::uniform_int_distribution
  // is not specified tightly enough for that).
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace kpartite
