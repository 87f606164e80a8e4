#include "kpartite/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/prng.hpp"

namespace kpartite {

namespace {

void validate_shape(const GenSpec& spec) {
  if (spec.uniformity < 1) throw InvalidArguments("uniformity must be at least 1");
  if (spec.vertex_count < spec.uniformity) {
    throw InvalidArguments("vertex count must be at least the uniformity");
  }
}

struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

Probability checked_probability(const Rational& p) {
  if (p < 0 || p > 1) throw InvalidArguments("inclusion probability outside [0, 1]");
  const BigInt num = numerator(p);
  const BigInt den = denominator(p);
  const BigInt limit = BigInt(std::numeric_limits<std::uint64_t>::max());
  if (num > limit || den > limit) {
    throw InvalidArguments("inclusion probability is too fine-grained");
  }
  return {num.convert_to<std::uint64_t>(), den.convert_to<std::uint64_t>()};
}

// Exact Bernoulli(num/den) decision from one 64-bit hash: accept when
// hash/2^64 < num/den, i.e. hash * den < num * 2^64 in 128-bit arithmetic.
inline bool coin(std::uint64_t hash, const Probability& p) {
  return static_cast<unsigned __int128>(hash) * p.den <
         (static_cast<unsigned __int128>(p.num) << 64);
}

Hypergraph generate_binomial(const GenSpec& spec) {
  const Probability p = checked_probability(spec.inclusion_probability);
  if (p.num == p.den) return Hypergraph::complete(spec.vertex_count, spec.uniformity);

  ColexTable table(spec.vertex_count, spec.uniformity);
  const std::uint64_t universe = table.universe();
  const std::uint64_t seed_base = split_mix64(spec.seed);
  std::vector<std::uint64_t> degrees(spec.vertex_count, 0);

  const bool use_bitset = universe <= edge_store_bit_budget();
  DynamicBitset bits(use_bitset ? universe : 0);
  std::vector<std::uint64_t> ranks;
  std::uint64_t edges = 0;

  if (universe > 0 && p.num > 0) {
    std::vector<std::uint32_t> subset(spec.uniformity);
    std::iota(subset.begin(), subset.end(), 0u);
    std::uint64_t rank = 0;
    do {
      if (coin(split_mix64(seed_base ^ split_mix64(rank)), p)) {
        if (use_bitset) {
          bits.set(rank);
        } else {
          ranks.push_back(rank);
        }
        ++edges;
        for (std::uint32_t v : subset) ++degrees[v];
      }
      ++rank;
    } while (next_subset_colex(subset, spec.vertex_count));
  }

  if (use_bitset) {
    return Hypergraph::from_rank_bitset(spec.vertex_count, spec.uniformity, std::move(bits),
                                        edges, std::move(degrees));
  }
  return Hypergraph::from_ranks(spec.vertex_count, spec.uniformity, std::move(ranks),
                                EdgeStoreKind::kSortedIndex, std::move(degrees));
}

Hypergraph generate_exact_count(const GenSpec& spec) {
  ColexTable table(spec.vertex_count, spec.uniformity);
  const std::uint64_t universe = table.universe();
  if (spec.edge_target > universe) {
    throw InvalidArguments("edge target exceeds the number of possible edges");
  }
  // Sparse Fisher-Yates over the virtual identity array of all ranks: only
  // displaced entries are stored, so memory is O(edge_target).
  SplitMix64Stream stream(spec.seed);
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  std::vector<std::uint64_t> picked;
  picked.reserve(spec.edge_target);
  for (std::uint64_t i = 0; i < spec.edge_target; ++i) {
    const std::uint64_t j = i + stream.bounded(universe - i);
    const auto it_i = displaced.find(i);
    const std::uint64_t value_i = it_i == displaced.end() ? i : it_i->second;
    const auto it_j = displaced.find(j);
    const std::uint64_t value_j = it_j == displaced.end() ? j : it_j->second;
    picked.push_back(value_j);
    displaced[j] = value_i;
  }
  std::sort(picked.begin(), picked.end());
  return Hypergraph::from_ranks(spec.vertex_count, spec.uniformity, std::move(picked));
}

Hypergraph generate_planted(const GenSpec& spec) {
  if (spec.planted_part_size < 1) {
    throw InvalidArguments("planted part size must be at least 1");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(spec.planted_part_size) * spec.uniformity;
  if (span > spec.vertex_count) {
    throw InvalidArguments("planted parts do not fit into the vertex set");
  }
  ColexTable table(spec.vertex_count, spec.uniformity);
  const std::uint64_t universe = table.universe();

  // Transversal edges take one vertex per consecutive block; a sorted edge
  // is one exactly when its i-th vertex lies in the i-th block.
  auto is_transversal = [&](std::span<const std::uint32_t> edge) {
    for (std::uint32_t i = 0; i < spec.uniformity; ++i) {
      if (edge[i] / spec.planted_part_size != i || edge[i] >= span) return false;
    }
    return true;
  };

  std::uint64_t transversals = 1;
  for (std::uint32_t i = 0; i < spec.uniformity; ++i) transversals *= spec.planted_part_size;
  if (spec.noise_removals > universe - transversals) {
    throw InvalidArguments("not enough non-transversal edges to remove");
  }

  // Keep the noise_removals smallest (key, rank) pairs among removable edges.
  const std::uint64_t seed_base = split_mix64(spec.seed);
  using Keyed = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Keyed> worst_first;
  if (spec.noise_removals > 0) {
    std::vector<std::uint32_t> subset(spec.uniformity);
    std::iota(subset.begin(), subset.end(), 0u);
    std::uint64_t rank = 0;
    do {
      if (!is_transversal(subset)) {
        Keyed keyed{split_mix64(seed_base ^ split_mix64(rank)), rank};
        if (worst_first.size() < spec.noise_removals) {
          worst_first.push(keyed);
        } else if (keyed < worst_first.top()) {
          worst_first.pop();
          worst_first.push(keyed);
        }
      }
      ++rank;
    } while (next_subset_colex(subset, spec.vertex_count));
  }
  std::vector<std::uint64_t> removed;
  removed.reserve(worst_first.size());
  while (!worst_first.empty()) {
    removed.push_back(worst_first.top().second);
    worst_first.pop();
  }
  std::sort(removed.begin(), removed.end());

  std::vector<std::uint64_t> degrees(spec.vertex_count);
  const std::uint64_t per_vertex =
      binomial(spec.vertex_count - 1, spec.uniformity - 1).convert_to<std::uint64_t>();
  std::fill(degrees.begin(), degrees.end(), per_vertex);
  std::vector<std::uint32_t> scratch(spec.uniformity);
  for (std::uint64_t rank : removed) {
    table.unrank(rank, scratch);
    for (std::uint32_t v : scratch) --degrees[v];
  }

  const std::uint64_t edges = universe - removed.size();
  if (universe <= edge_store_bit_budget()) {
    DynamicBitset bits(universe);
    bits.set_all();
    for (std::uint64_t rank : removed) bits.reset(rank);
    return Hypergraph::from_rank_bitset(spec.vertex_count, spec.uniformity, std::move(bits),
                                        edges, std::move(degrees));
  }
  std::vector<std::uint64_t> kept;
  kept.reserve(edges);
  std::size_t cursor = 0;
  for (std::uint64_t rank = 0; rank < universe; ++rank) {
    if (cursor < removed.size() && removed[cursor] == rank) {
      ++cursor;
      continue;
    }
    kept.push_back(rank);
  }
  return Hypergraph::from_ranks(spec.vertex_count, spec.uniformity, std::move(kept),
                                EdgeStoreKind::kSortedIndex, std::move(degrees));
}

}  // namespace

Hypergraph generate(const GenSpec& spec) {
  validate_shape(spec);
  switch (spec.kind) {
    case GenKind::kComplete:
      return Hypergraph::complete(spec.vertex_count, spec.uniformity);
    case GenKind::kEmpty:
      return Hypergraph::build(spec.vertex_count, spec.uniformity, {});
    case GenKind::kBinomial:
      return generate_binomial(spec);
    case GenKind::kExactCount:
      return generate_exact_count(spec);
    case GenKind::kPlanted:
      return generate_planted(spec);
  }
  throw InvalidArguments("unknown generator kind");
}

}  // namespace kpartite
