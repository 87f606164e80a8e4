#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kpartite/hypergraph.hpp"

namespace kpartite {

// First defect found in a claimed witness, in check order: empty part,
// then shared vertex, then missing transversal.
struct WitnessViolation {
  enum class Kind { kEmptyPart, kSharedVertex, kMissingTransversal };
  Kind kind;
  std::size_t part_a = 0;
  std::size_t part_b = 0;
  std::uint32_t vertex = 0;                 // kSharedVertex
  std::vector<std::uint32_t> transversal;   // kMissingTransversal, sorted
};

// nullopt when the parts are nonempty, pairwise disjoint, and every
// transversal (one vertex per part) is an edge. Throws InvalidArguments
// when the part count differs from the uniformity, VertexOutOfRange and
// NotASet for malformed parts.
std::optional<WitnessViolation> find_witness_violation(
    const Hypergraph& graph, const std::vector<std::vector<std::uint32_t>>& parts);

bool verify_witness(const Hypergraph& graph,
                    const std::vector<std::vector<std::uint32_t>>& parts);

// Edge-count threshold above which a bipartite graph with sides of size
// left_count and right_count must contain a complete subgraph joining some
// left_target left vertices to some right_target right vertices:
//   (s-1)^(1/t) * (w-t+1) * u^(1-1/t) + (t-1) * u
// with u = left_count, w = right_count, s = left_target, t = right_target.
// Diagnostics only; the finder never consults it.
double kst_threshold(std::uint64_t left_count, std::uint64_t right_count,
                     std::uint64_t left_target, std::uint64_t right_target);

// Strict comparison against the threshold widened upward by one ulp, so
// boundary ties never count as exceeding it.
bool kst_above_threshold(double threshold, std::uint64_t edge_total);

// Bipartite incidence with the right side capped at 64 vertices so rows
// fit in one word. adjacency[y] bit j set means left vertex y meets right
// vertex j.
struct KstInstance {
  std::uint64_t left_count = 0;
  std::uint32_t right_count = 0;
  std::vector<std::uint64_t> adjacency;  // one row per left vertex
  std::uint64_t edge_total = 0;
};

// Left side: all (uniformity-1)-subsets of the vertex set, indexed by colex
// rank. Right side: the selected vertices. (y, j) adjacent when the y-th
// subset plus selected[j] forms an edge. edge_total equals the degree sum
// of the selected vertices.
KstInstance build_kst_instance(const Hypergraph& graph,
                               std::span<const std::uint32_t> selected);

struct BicliqueWitness {
  std::vector<std::uint32_t> right_subset;  // indices into the right side
  std::vector<std::uint64_t> left_subset;   // indices into the left side
};

// Scans right-side subsets of size right_target in colex order and takes
// common neighborhoods; returns the first complete left_target-by-
// right_target biclique, or nullopt.
std::optional<BicliqueWitness> exists_biclique_bruteforce(const KstInstance& instance,
                                                          std::uint64_t left_target,
                                                          std::uint64_t right_target);

// Exhaustive-search size caps, by uniformity.
struct BruteForceCaps {
  std::uint32_t pair_cap = 12;     // uniformity 2
  std::uint32_t triple_cap = 10;   // uniformity 3
  std::uint32_t general_cap = 8;   // anything else
};

// Largest balanced part size for which some pairwise-disjoint family of
// uniformity-many parts spans a complete partite subgraph; 0 when the graph
// has no edges. Exhaustive; instances above the cap raise InstanceTooLarge.
std::uint64_t max_balanced_partite_bruteforce(const Hypergraph& graph,
                                              const BruteForceCaps& caps = {});

}  // namespace kpartite
