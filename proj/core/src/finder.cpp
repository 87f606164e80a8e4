#include "kpartite/finder.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/parameters.hpp"

namespace kpartite {

namespace {

struct SearchMode {
  bool forced = false;
  std::uint64_t forced_part_size = 0;
};

using Parts = std::vector<std::vector<std::uint32_t>>;

TraceLevel base_level(const Hypergraph& graph) {
  TraceLevel level;
  level.uniformity = 1;
  level.vertex_count = graph.vertex_count();
  level.edge_count = graph.edge_count();
  level.density = graph.density();
  return level;
}

// Recursive core shared by both modes. Returns parts innermost-first;
// nullopt only in forced mode.
std::optional<Parts> search(const Hypergraph& graph,
                            std::optional<std::uint64_t> parent_part_size,
                            const SearchMode& mode, std::vector<TraceLevel>& levels) {
  const std::uint32_t uniformity = graph.uniformity();
  if (uniformity == 1) {
    // Base case: the vertices that are themselves edges. For a 1-uniform
    // graph an edge's colex rank is the vertex id.
    std::vector<std::uint32_t> members;
    members.reserve(graph.edge_count());
    graph.for_each_rank(
        [&](std::uint64_t rank) { members.push_back(static_cast<std::uint32_t>(rank)); });
    if (mode.forced && members.size() < mode.forced_part_size) return std::nullopt;
    levels.push_back(base_level(graph));
    Parts parts;
    parts.push_back(std::move(members));
    return parts;
  }

  std::uint64_t part_size;
  BigInt pool_size;
  BigInt link_threshold;
  const Rational density = graph.density();
  if (mode.forced) {
    part_size = mode.forced_part_size;
    pool_size = compute_pool_size(part_size, density);
    link_threshold = compute_link_threshold(graph.vertex_count(), uniformity, density, part_size);
  } else {
    ParamSet params = derive_params(graph);
    part_size = params.part_size;
    if (parent_part_size &&
        (part_size < *parent_part_size || part_size < 2)) {
      throw InternalInvariantViolation(
          "recursion produced part size " + std::to_string(part_size) +
          " below the outer level's " + std::to_string(*parent_part_size));
    }
    pool_size = params.pool_size;
    link_threshold = params.link_threshold;
  }

  std::uint64_t pool = pool_size > graph.vertex_count()
                           ? graph.vertex_count()
                           : pool_size.convert_to<std::uint64_t>();
  if (!mode.forced && pool_size > graph.vertex_count()) {
    // derive_params already rejects this for part_size >= 2.
    throw InternalInvariantViolation("vertex pool exceeds the vertex count");
  }
  if (part_size > pool) {
    if (mode.forced) return std::nullopt;
    throw InternalInvariantViolation("part size exceeds the vertex pool");
  }

  std::vector<std::uint32_t> pool_vertices = graph.top_degree_vertices(pool);
  for (SubsetCursor cursor(std::move(pool_vertices), static_cast<std::uint32_t>(part_size));
       !cursor.done(); cursor.advance()) {
    auto candidate = cursor.current();
    std::vector<std::uint64_t> link_ranks = graph.link_set(candidate);
    if (BigInt(link_ranks.size()) < link_threshold) continue;

    TraceLevel level;
    level.uniformity = uniformity;
    level.vertex_count = graph.vertex_count();
    level.edge_count = graph.edge_count();
    level.density = density;
    level.part_size = part_size;
    level.pool_size = pool_size;
    level.link_threshold = link_threshold;
    level.chosen_part.assign(candidate.begin(), candidate.end());
    level.link_count = link_ranks.size();
    levels.push_back(std::move(level));

    Hypergraph next =
        Hypergraph::from_ranks(graph.vertex_count(), uniformity - 1, std::move(link_ranks));
    std::optional<Parts> inner =
        search(next, mode.forced ? std::nullopt : std::make_optional(part_size), mode, levels);
    if (inner) {
      inner->emplace_back(candidate.begin(), candidate.end());
      return inner;
    }
    // Only forced mode can fail below; natural-mode failures throw.
    levels.pop_back();
  }

  if (mode.forced) return std::nullopt;
  throw InternalInvariantViolation(
      "exhausted every candidate part without reaching the link threshold");
}

std::vector<std::uint32_t> lexicographically_smallest_edge(const Hypergraph& graph) {
  std::vector<std::uint32_t> best;
  graph.for_each_edge([&](std::span<const std::uint32_t> edge) {
    if (best.empty() ||
        std::lexicographical_compare(edge.begin(), edge.end(), best.begin(), best.end())) {
      best.assign(edge.begin(), edge.end());
    }
  });
  return best;
}

}  // namespace

FindResult find_partite(const Hypergraph& graph) {
  if (graph.edge_count() == 0) {
    throw NoEdges("the hypergraph has no edges");
  }
  FindResult result;
  result.witness.source_uniformity = graph.uniformity();

  if (graph.uniformity() == 1) {
    SearchMode mode;
    auto parts = search(graph, std::nullopt, mode, result.trace.levels);
    result.witness.parts = std::move(*parts);
    return result;
  }

  ParamSet params = derive_params(graph);
  if (params.part_size < 2) {
    // Too sparse or too small for a guaranteed partite family; fall back to
    // one edge split into singleton parts.
    std::vector<std::uint32_t> edge = lexicographically_smallest_edge(graph);
    TraceLevel level;
    level.uniformity = graph.uniformity();
    level.vertex_count = params.vertex_count;
    level.edge_count = params.edge_count;
    level.density = params.density;
    level.part_size = params.part_size;
    level.pool_size = params.pool_size;
    level.link_threshold = params.link_threshold;
    level.chosen_part = edge;
    result.trace.levels.push_back(std::move(level));
    for (std::uint32_t v : edge) {
      result.witness.parts.push_back({v});
    }
    return result;
  }

  SearchMode mode;
  auto parts = search(graph, std::nullopt, mode, result.trace.levels);
  result.witness.parts = std::move(*parts);
  return result;
}

std::optional<FindResult> find_partite_forced(const Hypergraph& graph,
                                              std::uint64_t forced_part_size) {
  if (forced_part_size == 0) {
    throw InvalidArguments("the forced part size must be at least 1");
  }
  if (graph.edge_count() == 0) {
    throw NoEdges("the hypergraph has no edges");
  }
  SearchMode mode;
  mode.forced = true;
  mode.forced_part_size = forced_part_size;
  FindResult result;
  result.witness.source_uniformity = graph.uniformity();
  auto parts = search(graph, std::nullopt, mode, result.trace.levels);
  if (!parts) return std::nullopt;
  result.witness.parts = std::move(*parts);
  return result;
}

PartiteWitness trim_balanced(const PartiteWitness& witness, std::uint64_t part_size) {
  PartiteWitness trimmed;
  trimmed.source_uniformity = witness.source_uniformity;
  trimmed.parts.reserve(witness.parts.size());
  for (const auto& part : witness.parts) {
    if (part.size() < part_size) {
      throw InvalidArguments("a part is smaller than the requested balanced size");
    }
    std::vector<std::uint32_t> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    sorted.resize(part_size);
    trimmed.parts.push_back(std::move(sorted));
  }
  return trimmed;
}

}  // namespace kpartite
