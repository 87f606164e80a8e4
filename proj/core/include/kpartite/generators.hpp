#pragma once

#include <cstdint>

#include "kpartite/bigint.hpp"
#include "kpartite/hypergraph.hpp"

namespace kpartite {

enum class GenKind { kComplete, kEmpty, kBinomial, kExactCount, kPlanted };

// Everything needed to rebuild an instance bit-exactly. Fields irrelevant
// to the kind are ignored.
struct GenSpec {
  GenKind kind = GenKind::kEmpty;
  std::uint32_t vertex_count = 0;
  std::uint32_t uniformity = 0;
  Rational inclusion_probability;     // kBinomial, in [0, 1]
  std::uint64_t edge_target = 0;      // kExactCount
  std::uint32_t planted_part_size = 0;  // kPlanted
  std::uint64_t noise_removals = 0;     // kPlanted
  std::uint64_t seed = 0;
};

// Deterministic function of its arguments; identical output on every platform.
// kBinomial flips one counter-keyed coin per colex rank; kExactCount draws
// a uniform edge_target-subset of ranks by sparse partial shuffle;
// kPlanted starts from the complete hypergraph over blocks of
// planted_part_size consecutive vertices and removes the noise_removals
// non-transversal edges with the smallest counter-hash keys.
Hypergraph generate(const GenSpec& spec);

}  // namespace kpartite
