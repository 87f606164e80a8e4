#include "kpartite/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numeric>
#include <string>

#include "kpartite/errors.hpp"
#include "kpartite/prng.hpp"

namespace kpartite {

namespace {

constexpr std::uint64_t kProbeEmpty = std::numeric_limits<std::uint64_t>::max();

void validate_vertex(std::uint32_t vertex, std::uint32_t vertex_count) {
  if (vertex >= vertex_count) {
    throw VertexOutOfRange("vertex " + std::to_string(vertex) + " is outside 0.." +
                           std::to_string(vertex_count) + "-1");
  }
}

void validate_anchor_set(std::span<const std::uint32_t> anchors, std::uint32_t vertex_count) {
  if (anchors.empty()) throw InvalidArguments("anchor set must be nonempty");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    validate_vertex(anchors[i], vertex_count);
    if (i > 0 && anchors[i - 1] >= anchors[i]) {
      throw InvalidSubset("anchor set must be strictly increasing");
    }
  }
}

}  // namespace

std::uint64_t edge_store_bit_budget() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 33;  // 1 GiB of bits
  const char* raw = std::getenv("PARTITE_MEM_BUDGET_BITS");
  if (raw == nullptr || *raw == '\0') return kDefault;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0) return kDefault;
  return value;
}

Hypergraph::Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity)
    : table_(vertex_count, uniformity), n_(vertex_count), k_(uniformity) {
  if (uniformity == 0) throw InvalidArguments("uniformity must be at least 1");
}

void Hypergraph::adopt_bitset(DynamicBitset bits, std::uint64_t edge_count) {
  kind_ = EdgeStoreKind::kRankBitset;
  bits_ = std::move(bits);
  m_ = edge_count;
}

void Hypergraph::adopt_ranks(std::vector<std::uint64_t> ranks) {
  kind_ = EdgeStoreKind::kSortedIndex;
  ranks_ = std::move(ranks);
  m_ = ranks_.size();
  build_probe_table();
}

void Hypergraph::build_probe_table() {
  std::uint64_t slots = 16;
  while (slots < 2 * std::max<std::uint64_t>(m_, 1)) slots <<= 1;
  probe_.assign(slots, kProbeEmpty);
  probe_mask_ = slots - 1;
  for (std::uint64_t rank : ranks_) {
    std::uint64_t h = split_mix64(rank) & probe_mask_;
    while (probe_[h] != kProbeEmpty) h = (h + 1) & probe_mask_;
    probe_[h] = rank;
  }
}

bool Hypergraph::probe_contains(std::uint64_t rank) const {
  std::uint64_t h = split_mix64(rank) & probe_mask_;
  while (probe_[h] != kProbeEmpty) {
    if (probe_[h] == rank) return true;
    h = (h + 1) & probe_mask_;
  }
  return false;
}

void Hypergraph::finalize_degrees(std::vector<std::uint64_t> degree_hint) {
  if (!degree_hint.empty()) {
    if (degree_hint.size() != n_) {
      throw InvalidArguments("degree hint has the wrong length");
    }
    degrees_ = std::move(degree_hint);
    return;
  }
  degrees_.assign(n_, 0);
  for_each_edge([&](std::span<const std::uint32_t> edge) {
    for (std::uint32_t v : edge) ++degrees_[v];
  });
}

Hypergraph Hypergraph::build(std::uint32_t vertex_count, std::uint32_t uniformity,
                             const std::vector<std::vector<std::uint32_t>>& edges,
                             EdgeStoreKind kind) {
  Hypergraph h(vertex_count, uniformity);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(edges.size());
  std::vector<std::uint32_t> canonical;
  for (const auto& edge : edges) {
    if (edge.size() != uniformity) {
      throw InvalidSubset("edge has " + std::to_string(edge.size()) +
                          " vertices, expected " + std::to_string(uniformity));
    }
    canonical.assign(edge.begin(), edge.end());
    std::sort(canonical.begin(), canonical.end());
    for (std::size_t i = 1; i < canonical.size(); ++i) {
      if (canonical[i - 1] == canonical[i]) {
        throw NotASet("edge repeats vertex " + std::to_string(canonical[i]));
      }
    }
    for (std::uint32_t v : canonical) validate_vertex(v, vertex_count);
    ranks.push_back(h.table_.rank_of(canonical));
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return from_ranks(vertex_count, uniformity, std::move(ranks), kind);
}

Hypergraph Hypergraph::from_ranks(std::uint32_t vertex_count, std::uint32_t uniformity,
                                  std::vector<std::uint64_t> sorted_ranks,
                                  EdgeStoreKind kind,
                                  std::vector<std::uint64_t> degree_hint) {
  Hypergraph h(vertex_count, uniformity);
  const std::uint64_t universe = h.table_.universe();
  for (std::size_t i = 0; i < sorted_ranks.size(); ++i) {
    if (sorted_ranks[i] >= universe) {
      throw InvalidArguments("edge rank outside the universe");
    }
    if (i > 0 && sorted_ranks[i - 1] >= sorted_ranks[i]) {
      throw InvalidArguments("edge ranks must be strictly increasing");
    }
  }
  EdgeStoreKind resolved = kind;
  if (resolved == EdgeStoreKind::kAuto) {
    resolved = universe <= edge_store_bit_budget() ? EdgeStoreKind::kRankBitset
                                                   : EdgeStoreKind::kSortedIndex;
  }
  if (resolved == EdgeStoreKind::kRankBitset) {
    DynamicBitset bits(universe);
    for (std::uint64_t r : sorted_ranks) bits.set(r);
    h.adopt_bitset(std::move(bits), sorted_ranks.size());
  } else {
    h.adopt_ranks(std::move(sorted_ranks));
  }
  h.finalize_degrees(std::move(degree_hint));
  return h;
}

Hypergraph Hypergraph::from_rank_bitset(std::uint32_t vertex_count, std::uint32_t uniformity,
                                        DynamicBitset bits, std::uint64_t edge_count,
                                        std::vector<std::uint64_t> degree_hint) {
  Hypergraph h(vertex_count, uniformity);
  if (bits.size() != h.table_.universe()) {
    throw InvalidArguments("bitset size does not match the universe");
  }
  h.adopt_bitset(std::move(bits), edge_count);
  h.finalize_degrees(std::move(degree_hint));
  return h;
}

Hypergraph Hypergraph::complete(std::uint32_t vertex_count, std::uint32_t uniformity,
                                EdgeStoreKind kind) {
  Hypergraph probe(vertex_count, uniformity);
  const std::uint64_t universe = probe.table_.universe();
  std::vector<std::uint64_t> degrees(vertex_count, 0);
  if (vertex_count >= uniformity && vertex_count > 0) {
    std::uint64_t per_vertex =
        binomial(vertex_count - 1, uniformity - 1).convert_to<std::uint64_t>();
    std::fill(degrees.begin(), degrees.end(), per_vertex);
  }
  EdgeStoreKind resolved = kind;
  if (resolved == EdgeStoreKind::kAuto) {
    resolved = universe <= edge_store_bit_budget() ? EdgeStoreKind::kRankBitset
                                                   : EdgeStoreKind::kSortedIndex;
  }
  if (resolved == EdgeStoreKind::kRankBitset) {
    DynamicBitset bits(universe);
    bits.set_all();
    return from_rank_bitset(vertex_count, uniformity, std::move(bits), universe,
                            std::move(degrees));
  }
  std::vector<std::uint64_t> ranks(universe);
  std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
  return from_ranks(vertex_count, uniformity, std::move(ranks),
                    EdgeStoreKind::kSortedIndex, std::move(degrees));
}

bool Hypergraph::contains_edge(std::span<const std::uint32_t> edge) const {
  if (edge.size() != k_) {
    throw InvalidSubset("edge has " + std::to_string(edge.size()) +
                        " vertices, expected " + std::to_string(k_));
  }
  std::vector<std::uint32_t> canonical(edge.begin(), edge.end());
  std::sort(canonical.begin(), canonical.end());
  for (std::size_t i = 1; i < canonical.size(); ++i) {
    if (canonical[i - 1] == canonical[i]) {
      throw NotASet("edge repeats vertex " + std::to_string(canonical[i]));
    }
  }
  for (std::uint32_t v : canonical) validate_vertex(v, n_);
  return contains_rank(table_.rank_of(canonical));
}

std::uint64_t Hypergraph::degree(std::uint32_t vertex) const {
  validate_vertex(vertex, n_);
  return degrees_[vertex];
}

std::vector<std::uint32_t> Hypergraph::top_degree_vertices(std::uint64_t count) const {
  if (count > n_) {
    throw InvalidArguments("requested more vertices than the graph has");
  }
  std::vector<std::uint32_t> order(n_);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (degrees_[a] != degrees_[b]) return degrees_[a] > degrees_[b];
    return a < b;
  });
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::uint64_t> Hypergraph::link_set(std::span<const std::uint32_t> anchors) const {
  if (k_ < 2) {
    throw InvalidArguments("link sets require uniformity at least 2");
  }
  validate_anchor_set(anchors, n_);

  std::vector<std::uint64_t> result;
  const std::uint32_t sub_size = k_ - 1;
  if (n_ < sub_size) return result;

  std::vector<std::uint32_t> candidate(sub_size);
  std::iota(candidate.begin(), candidate.end(), 0u);
  std::vector<std::uint32_t> merged(k_);
  std::uint64_t rank = 0;  // colex enumeration visits ranks in order
  do {
    bool keep = true;
    for (std::uint32_t anchor : anchors) {
      // Merge the anchor into the sorted candidate; an anchor already
      // inside the candidate cannot extend it to a k-set.
      bool collision = false;
      std::size_t out = 0;
      std::size_t i = 0;
      while (i < sub_size && candidate[i] < anchor) merged[out++] = candidate[i++];
      if (i < sub_size && candidate[i] == anchor) {
        collision = true;
      } else {
        merged[out++] = anchor;
        while (i < sub_size) merged[out++] = candidate[i++];
      }
      if (collision || !contains_rank(table_.rank_of(merged))) {
        keep = false;
        break;
      }
    }
    if (keep) result.push_back(rank);
    ++rank;
  } while (next_subset_colex(candidate, n_));
  return result;
}

Rational Hypergraph::density() const {
  if (n_ < k_) {
    throw InvalidArguments("density is undefined when the vertex count is below the uniformity");
  }
  return Rational(BigInt(m_), BigInt(table_.universe()));
}

}  // namespace kpartite
