#pragma once

// Reference implementations used as independent oracles in the tests.
// Everything here is written the slow, obviously-correct way and shares no
// code with the library paths under test.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kpartite/bigint.hpp"
#include "kpartite/hypergraph.hpp"

namespace kpartite::testing {

// Pascal's triangle built purely by the additive recurrence.
class PascalOracle {
 public:
  explicit PascalOracle(std::uint32_t max_rows) : rows_(max_rows + 1) {
    for (std::uint32_t r = 0; r <= max_rows; ++r) {
      rows_[r].assign(r + 1, 1);
      for (std::uint32_t c = 1; c < r; ++c) {
        rows_[r][c] = rows_[r - 1][c - 1] + rows_[r - 1][c];
      }
    }
  }

  BigInt choose(std::uint32_t items, std::uint32_t pick) const {
    if (pick > items) return 0;
    return rows_[items][pick];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Colex rank straight from the defining sum, using the additive table.
inline BigInt oracle_colex_rank(const PascalOracle& pascal,
                                const std::vector<std::uint32_t>& subset) {
  BigInt rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += pascal.choose(subset[i], static_cast<std::uint32_t>(i) + 1);
  }
  return rank;
}

// All size-subsets of the values list, by plain recursion, then ordered by
// their colex rank over positions. Independent of SubsetCursor.
inline std::vector<std::vector<std::uint32_t>> oracle_subsets_in_colex_order(
    const std::vector<std::uint32_t>& values, std::uint32_t size) {
  std::vector<std::vector<std::uint32_t>> index_sets;
  std::vector<std::uint32_t> current;
  auto recurse = [&](auto&& self, std::uint32_t next) -> void {
    if (current.size() == size) {
      index_sets.push_back(current);
      return;
    }
    for (std::uint32_t i = next; i < values.size(); ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  PascalOracle pascal(static_cast<std::uint32_t>(values.size()));
  std::sort(index_sets.begin(), index_sets.end(),
            [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
              return oracle_colex_rank(pascal, a) < oracle_colex_rank(pascal, b);
            });
  std::vector<std::vector<std::uint32_t>> result;
  result.reserve(index_sets.size());
  for (const auto& indices : index_sets) {
    std::vector<std::uint32_t> subset;
    subset.reserve(indices.size());
    for (std::uint32_t i : indices) subset.push_back(values[i]);
    result.push_back(std::move(subset));
  }
  return result;
}

// Link set by definition: try every (uniformity-1)-subset and query
// contains_edge for each anchor.
inline std::vector<std::vector<std::uint32_t>> oracle_link_sets(
    const Hypergraph& graph, const std::vector<std::uint32_t>& anchors) {
  std::vector<std::uint32_t> all(graph.vertex_count());
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) all[v] = v;
  std::vector<std::vector<std::uint32_t>> result;
  for (auto& candidate : oracle_subsets_in_colex_order(all, graph.uniformity() - 1)) {
    bool keep = true;
    for (std::uint32_t anchor : anchors) {
      if (std::find(candidate.begin(), candidate.end(), anchor) != candidate.end()) {
        keep = false;
        break;
      }
      std::vector<std::uint32_t> edge = candidate;
      edge.push_back(anchor);
      std::sort(edge.begin(), edge.end());
      if (!graph.contains_edge(edge)) {
        keep = false;
        break;
      }
    }
    if (keep) result.push_back(candidate);
  }
  return result;
}

}  // namespace kpartite::testing
