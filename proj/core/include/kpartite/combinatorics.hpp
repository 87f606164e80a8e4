#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpartite/bigint.hpp"

namespace kpartite {

// Exact binomial coefficient; 0 when subset_size > element_count.
BigInt binomial(std::uint64_t element_count, std::uint64_t subset_size);

// Colexicographic (combinadic) rank of a strictly increasing subset:
// sum over positions i of C(subset[i], i+1). Bijective onto
// [0, C(universe, |subset|)) for subsets drawn from any universe.
BigInt colex_rank(std::span<const std::uint32_t> subset);

// Inverse of colex_rank for a given subset size.
std::vector<std::uint32_t> colex_unrank(const BigInt& rank, std::uint32_t subset_size);

// Advance a strictly increasing subset of {0,...,universe-1} to its colex
// successor in place. Returns false after the last subset, resetting to the
// first one ({0,...,size-1}), so a do/while loop visits each subset once.
bool next_subset_colex(std::span<std::uint32_t> subset, std::uint32_t universe);

// Streams the size-t subsets of a fixed ground list in colexicographic order
// over index tuples. Amortized constant work per emission.
class SubsetCursor {
 public:
  SubsetCursor(std::vector<std::uint32_t> ground, std::uint32_t subset_size);

  bool done() const { return done_; }
  std::span<const std::uint32_t> current() const {
    return {values_.data(), values_.size()};
  }
  void advance();

 private:
  std::vector<std::uint32_t> ground_;
  std::vector<std::uint32_t> indices_;
  std::vector<std::uint32_t> values_;
  bool done_ = false;
};

// Precomputed Pascal rows for one (vertex_count, subset_size) universe,
// giving O(subset_size) rank/unrank entirely in 64-bit arithmetic.
// Construction fails with InstanceTooLarge when C(vertex_count, subset_size)
// does not fit below 2^63; entries outside the u64 range saturate but are
// provably never consulted for valid ranks.
class ColexTable {
 public:
  ColexTable(std::uint32_t vertex_count, std::uint32_t subset_size);

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t subset_size() const { return k_; }
  std::uint64_t universe() const { return universe_; }

  // C(items, pick) for pick <= subset_size, items <= vertex_count (saturating).
  std::uint64_t choose(std::uint32_t items, std::uint32_t pick) const {
    return rows_[pick][items];
  }

  std::uint64_t rank_of(std::span<const std::uint32_t> subset) const;
  void unrank(std::uint64_t rank, std::span<std::uint32_t> out) const;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::uint64_t universe_;
  std::vector<std::vector<std::uint64_t>> rows_;  // rows_[j][c] = C(c, j)
};

}  // namespace kpartite
