#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpartite/bigint.hpp"
#include "kpartite/bitset.hpp"
#include "kpartite/combinatorics.hpp"

namespace kpartite {

// Edge membership backends. kRankBitset keeps one bit per colex rank;
// kSortedIndex keeps the sorted rank list plus an open-addressing probe
// table. kAuto picks by the memory budget (default 2^33 bits, override
// with the PARTITE_MEM_BUDGET_BITS environment variable).
enum class EdgeStoreKind { kAuto, kRankBitset, kSortedIndex };

// Resolved bit budget used by kAuto backend selection.
std::uint64_t edge_store_bit_budget();

// Immutable uniform hypergraph over vertices 0..vertex_count-1. Edges are
// addressed by their colex rank; membership is O(uniformity).
class Hypergraph {
 public:
  static Hypergraph build(std::uint32_t vertex_count, std::uint32_t uniformity,
                          const std::vector<std::vector<std::uint32_t>>& edges,
                          EdgeStoreKind kind = EdgeStoreKind::kAuto);

  // sorted_ranks must be strictly increasing and below the universe size.
  // degree_hint, when non-empty, must be the per-vertex edge counts; it
  // skips the O(m * uniformity) recount for callers that tracked degrees
  // while producing the ranks.
  static Hypergraph from_ranks(std::uint32_t vertex_count, std::uint32_t uniformity,
                               std::vector<std::uint64_t> sorted_ranks,
                               EdgeStoreKind kind = EdgeStoreKind::kAuto,
                               std::vector<std::uint64_t> degree_hint = {});

  static Hypergraph from_rank_bitset(std::uint32_t vertex_count, std::uint32_t uniformity,
                                     DynamicBitset bits, std::uint64_t edge_count,
                                     std::vector<std::uint64_t> degree_hint = {});

  static Hypergraph complete(std::uint32_t vertex_count, std::uint32_t uniformity,
                             EdgeStoreKind kind = EdgeStoreKind::kAuto);

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t uniformity() const { return k_; }
  std::uint64_t edge_count() const { return m_; }
  const ColexTable& table() const { return table_; }
  EdgeStoreKind backend() const { return kind_; }

  bool contains_rank(std::uint64_t rank) const {
    return kind_ == EdgeStoreKind::kRankBitset ? bits_.test(rank) : probe_contains(rank);
  }

  // Accepts the edge in any vertex order; canonicalizes before lookup.
  bool contains_edge(std::span<const std::uint32_t> edge) const;

  std::uint64_t degree(std::uint32_t vertex) const;
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }

  // The `count` vertices of largest degree, ties broken by smaller id;
  // result sorted ascending by id.
  std::vector<std::uint32_t> top_degree_vertices(std::uint64_t count) const;

  // Colex ranks (in the (uniformity-1)-subset universe, ascending) of every
  // (uniformity-1)-set that forms an edge together with each anchor vertex.
  // Sets meeting the anchors are excluded by construction.
  std::vector<std::uint64_t> link_set(std::span<const std::uint32_t> anchors) const;

  // Exact edge_count / C(vertex_count, uniformity).
  Rational density() const;

  template <typename Fn>
  void for_each_rank(Fn&& fn) const {
    if (kind_ == EdgeStoreKind::kRankBitset) {
      for (std::uint64_t r = bits_.find_first(); r != DynamicBitset::npos;
           r = bits_.find_next(r)) {
        fn(r);
      }
    } else {
      for (std::uint64_t r : ranks_) fn(r);
    }
  }

  // Visits edges as sorted vertex spans, in ascending colex rank order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    std::vector<std::uint32_t> scratch(k_);
    for_each_rank([&](std::uint64_t r) {
      table_.unrank(r, scratch);
      fn(std::span<const std::uint32_t>(scratch.data(), scratch.size()));
    });
  }

 private:
  Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity);

  void adopt_bitset(DynamicBitset bits, std::uint64_t edge_count);
  void adopt_ranks(std::vector<std::uint64_t> ranks);
  void build_probe_table();
  bool probe_contains(std::uint64_t rank) const;
  void finalize_degrees(std::vector<std::uint64_t> degree_hint);

  ColexTable table_;
  std::uint32_t n_;
  std::uint32_t k_;
  std::uint64_t m_ = 0;
  EdgeStoreKind kind_ = EdgeStoreKind::kRankBitset;
  DynamicBitset bits_;
  std::vector<std::uint64_t> ranks_;
  std::vector<std::uint64_t> probe_;
  std::uint64_t probe_mask_ = 0;
  std::vector<std::uint64_t> degrees_;
};

}  // namespace kpartite
