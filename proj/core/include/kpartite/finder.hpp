#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpartite/bigint.hpp"
#include "kpartite/hypergraph.hpp"

namespace kpartite {

// A complete partite family: every transversal picking one vertex per part
// is an edge of the source hypergraph. parts[0] is the innermost set (built
// at the 1-uniform base of the recursion); the last part is the one chosen
// at the outermost level. Parts are sorted ascending and pairwise disjoint.
struct PartiteWitness {
  std::vector<std::vector<std::uint32_t>> parts;
  std::uint32_t source_uniformity = 0;
};

// One recursion level. The base level (uniformity 1) carries zeros for the
// search parameters and an empty chosen_part.
struct TraceLevel {
  std::uint32_t uniformity = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  Rational density;
  std::uint64_t part_size = 0;
  BigInt pool_size;
  BigInt link_threshold;
  std::vector<std::uint32_t> chosen_part;
  std::uint64_t link_count = 0;
};

// Levels ordered outermost first (descending uniformity).
struct RecursionTrace {
  std::vector<TraceLevel> levels;
};

struct FindResult {
  PartiteWitness witness;
  RecursionTrace trace;
};

// Natural mode: derives the part size from the graph itself, commits to the
// first candidate part whose link set reaches the threshold, and recurses
// down to uniformity 1. When the derived part size is below 2 the result is
// the lexicographically smallest edge split into singletons. Exhausting all
// candidates is impossible for honestly derived parameters and raises
// InternalInvariantViolation.
FindResult find_partite(const Hypergraph& graph);

// Forced mode: runs the same recursion with an imposed part size at every
// level (pool size and link threshold recomputed from it per level; the
// vertex pool is clamped to the vertex count). Backtracks across candidate
// parts, and returns nullopt when no witness exists under that part size.
std::optional<FindResult> find_partite_forced(const Hypergraph& graph,
                                              std::uint64_t forced_part_size);

// Truncates every part to its part_size lowest vertex ids. Parts smaller
// than part_size raise InvalidArguments.
PartiteWitness trim_balanced(const PartiteWitness& witness, std::uint64_t part_size);

}  // namespace kpartite
