#pragma once

#include <cstdint>

#include "kpartite/bigint.hpp"
#include "kpartite/hypergraph.hpp"

namespace kpartite {

// The per-level search parameters. part_size is the target size of each
// part of the extracted partite family; pool_size is how many top-degree
// vertices are scanned for candidate parts; link_threshold is the minimum
// link-set cardinality at which the search recurses.
struct ParamSet {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint32_t uniformity = 0;
  Rational density;           // edge_count / C(vertex_count, uniformity), exact
  std::uint64_t part_size = 0;
  BigInt pool_size;           // exact ceil(4 * part_size / density)
  BigInt link_threshold;      // exact ceil((density/4)^part_size * C(vertex_count, uniformity-1))
};

// Largest integer whose (uniformity-1)-th power, scaled by ln(16/density),
// stays at most ln(vertex_count). Decided exactly: the defining inequality
// is equivalent to (16/density)^(p^(uniformity-1)) <= vertex_count, which is
// a big-integer power comparison on the rational density. No floating point.
std::uint64_t compute_part_size(std::uint64_t vertex_count, const Rational& density,
                                std::uint32_t uniformity);

// Exact ceil(4 * part_size / density).
BigInt compute_pool_size(std::uint64_t part_size, const Rational& density);

// Exact ceil((density/4)^part_size * C(vertex_count, uniformity-1)).
BigInt compute_link_threshold(std::uint64_t vertex_count, std::uint32_t uniformity,
                              const Rational& density, std::uint64_t part_size);

// Bundles the above for one hypergraph; checks the guarantees that make the
// search well defined (pool_size <= vertex_count when part_size >= 2) and
// raises InternalInvariantViolation if they fail.
ParamSet derive_params(const Hypergraph& graph);

}  // namespace kpartite
