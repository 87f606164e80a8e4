#include "kpartite/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <string>

#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"

namespace kpartite {

namespace {

// Sorted copies with per-part validation (set-ness and vertex range).
std::vector<std::vector<std::uint32_t>> canonical_parts(
    const Hypergraph& graph, const std::vector<std::vector<std::uint32_t>>& parts) {
  std::vector<std::vector<std::uint32_t>> sorted;
  sorted.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<std::uint32_t> copy = part;
    std::sort(copy.begin(), copy.end());
    for (std::size_t i = 1; i < copy.size(); ++i) {
      if (copy[i - 1] == copy[i]) {
        throw NotASet("part repeats vertex " + std::to_string(copy[i]));
      }
    }
    if (!copy.empty() && copy.back() >= graph.vertex_count()) {
      throw VertexOutOfRange("part vertex " + std::to_string(copy.back()) +
                             " is outside the graph");
    }
    sorted.push_back(std::move(copy));
  }
  return sorted;
}

}  // namespace

std::optional<WitnessViolation> find_witness_violation(
    const Hypergraph& graph, const std::vector<std::vector<std::uint32_t>>& parts) {
  if (parts.size() != graph.uniformity()) {
    throw InvalidArguments("witness has " + std::to_string(parts.size()) +
                           " parts, the graph is " + std::to_string(graph.uniformity()) +
                           "-uniform");
  }
  auto sorted = canonical_parts(graph, parts);

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty()) {
      WitnessViolation violation;
      violation.kind = WitnessViolation::Kind::kEmptyPart;
      violation.part_a = i;
      return violation;
    }
  }

  std::vector<std::size_t> owner(graph.vertex_count(), sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::uint32_t v : sorted[i]) {
      if (owner[v] != sorted.size()) {
        WitnessViolation violation;
        violation.kind = WitnessViolation::Kind::kSharedVertex;
        violation.part_a = owner[v];
        violation.part_b = i;
        violation.vertex = v;
        return violation;
      }
      owner[v] = i;
    }
  }

  // Odometer over the parts; each selection is checked as a sorted tuple.
  const std::size_t count = sorted.size();
  std::vector<std::size_t> pick(count, 0);
  std::vector<std::uint32_t> tuple(count);
  for (;;) {
    for (std::size_t i = 0; i < count; ++i) tuple[i] = sorted[i][pick[i]];
    std::vector<std::uint32_t> edge = tuple;
    std::sort(edge.begin(), edge.end());
    if (!graph.contains_rank(graph.table().rank_of(edge))) {
      WitnessViolation violation;
      violation.kind = WitnessViolation::Kind::kMissingTransversal;
      violation.transversal = std::move(edge);
      return violation;
    }
    std::size_t idx = count;
    bool rolled_over = true;
    while (idx > 0) {
      --idx;
      if (++pick[idx] < sorted[idx].size()) {
        rolled_over = false;
        break;
      }
      pick[idx] = 0;
    }
    if (rolled_over) return std::nullopt;
  }
}

bool verify_witness(const Hypergraph& graph,
                    const std::vector<std::vector<std::uint32_t>>& parts) {
  return !find_witness_violation(graph, parts).has_value();
}

double kst_threshold(std::uint64_t left_count, std::uint64_t right_count,
                     std::uint64_t left_target, std::uint64_t right_target) {
  if (left_target < 1 || left_count < left_target) {
    throw InvalidArguments("need left_count >= left_target >= 1");
  }
  if (right_target < 1 || right_count < right_target) {
    throw InvalidArguments("need right_count >= right_target >= 1");
  }
  const double u = static_cast<double>(left_count);
  const double w = static_cast<double>(right_count);
  const double s = static_cast<double>(left_target);
  const double t = static_cast<double>(right_target);
  double root_term;
  if (right_target == 1) {
    root_term = (s - 1.0) * w;
  } else if (right_target == 2) {
    root_term = std::sqrt(s - 1.0) * (w - t + 1.0) * std::sqrt(u);
  } else if (right_target == 3) {
    root_term = std::cbrt(s - 1.0) * (w - t + 1.0) * std::cbrt(u * u);
  } else {
    root_term = std::pow(s - 1.0, 1.0 / t) * (w - t + 1.0) * std::pow(u, 1.0 - 1.0 / t);
  }
  return root_term + (t - 1.0) * u;
}

bool kst_above_threshold(double threshold, std::uint64_t edge_total) {
  return static_cast<double>(edge_total) >
         std::nextafter(threshold, std::numeric_limits<double>::infinity());
}

KstInstance build_kst_instance(const Hypergraph& graph,
                               std::span<const std::uint32_t> selected) {
  if (graph.uniformity() < 2) {
    throw InvalidArguments("bipartite incidence needs uniformity at least 2");
  }
  if (selected.size() > 64) {
    throw InstanceTooLarge("at most 64 selected vertices are supported");
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i] >= graph.vertex_count()) {
      throw VertexOutOfRange("selected vertex " + std::to_string(selected[i]) +
                             " is outside the graph");
    }
    if (i > 0 && selected[i - 1] >= selected[i]) {
      throw InvalidSubset("selected vertices must be strictly increasing");
    }
  }

  KstInstance instance;
  const std::uint32_t sub_size = graph.uniformity() - 1;
  BigInt left = binomial(graph.vertex_count(), sub_size);
  if (left > (BigInt(1) << 24)) {
    throw InstanceTooLarge("left side of the incidence is too large to materialize");
  }
  instance.left_count = left.convert_to<std::uint64_t>();
  instance.right_count = static_cast<std::uint32_t>(selected.size());
  instance.adjacency.assign(instance.left_count, 0);

  if (instance.left_count > 0 && sub_size <= graph.vertex_count()) {
    std::vector<std::uint32_t> candidate(sub_size);
    std::iota(candidate.begin(), candidate.end(), 0u);
    std::vector<std::uint32_t> merged(graph.uniformity());
    std::uint64_t row = 0;
    do {
      std::uint64_t bits = 0;
      for (std::uint32_t j = 0; j < instance.right_count; ++j) {
        const std::uint32_t anchor = selected[j];
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
        if (!collision && graph.contains_rank(graph.table().rank_of(merged))) {
          bits |= std::uint64_t{1} << j;
        }
      }
      instance.adjacency[row] = bits;
      instance.edge_total += std::popcount(bits);
      ++row;
    } while (next_subset_colex(candidate, graph.vertex_count()));
  }
  return instance;
}

std::optional<BicliqueWitness> exists_biclique_bruteforce(const KstInstance& instance,
                                                          std::uint64_t left_target,
                                                          std::uint64_t right_target) {
  if (left_target < 1 || left_target > instance.left_count) {
    throw InvalidArguments("left target outside [1, left_count]");
  }
  if (right_target < 1 || right_target > instance.right_count) {
    throw InvalidArguments("right target outside [1, right_count]");
  }
  std::vector<std::uint32_t> right_pick(right_target);
  std::iota(right_pick.begin(), right_pick.end(), 0u);
  do {
    std::uint64_t mask = 0;
    for (std::uint32_t j : right_pick) mask |= std::uint64_t{1} << j;
    std::vector<std::uint64_t> commons;
    for (std::uint64_t y = 0; y < instance.left_count; ++y) {
      if ((instance.adjacency[y] & mask) == mask) {
        commons.push_back(y);
        if (commons.size() == left_target) break;
      }
    }
    if (commons.size() == left_target) {
      BicliqueWitness witness;
      witness.right_subset = right_pick;
      witness.left_subset = std::move(commons);
      return witness;
    }
  } while (next_subset_colex(right_pick, instance.right_count));
  return std::nullopt;
}

std::uint64_t max_balanced_partite_bruteforce(const Hypergraph& graph,
                                              const BruteForceCaps& caps) {
  const std::uint32_t uniformity = graph.uniformity();
  std::uint32_t cap = caps.general_cap;
  if (uniformity == 2) cap = caps.pair_cap;
  if (uniformity == 3) cap = caps.triple_cap;
  if (graph.vertex_count() > cap) {
    throw InstanceTooLarge("brute force is capped at " + std::to_string(cap) +
                           " vertices for uniformity " + std::to_string(uniformity));
  }
  if (graph.edge_count() == 0) return 0;

  const std::uint32_t n = graph.vertex_count();
  for (std::uint64_t size = n / uniformity; size >= 1; --size) {
    // All size-subsets as bitmasks, in colex order.
    std::vector<std::uint32_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0u);
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> subsets;
    do {
      std::uint32_t mask = 0;
      for (std::uint32_t v : pick) mask |= std::uint32_t{1} << v;
      subsets.emplace_back(mask, pick);
    } while (next_subset_colex(pick, n));

    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::uint32_t>> family(uniformity);
    auto spans_complete = [&]() {
      std::vector<std::size_t> odo(uniformity, 0);
      std::vector<std::uint32_t> tuple(uniformity);
      for (;;) {
        for (std::uint32_t i = 0; i < uniformity; ++i) tuple[i] = family[i][odo[i]];
        std::vector<std::uint32_t> edge = tuple;
        std::sort(edge.begin(), edge.end());
        if (!graph.contains_rank(graph.table().rank_of(edge))) return false;
        std::size_t idx = uniformity;
        bool rolled = true;
        while (idx > 0) {
          --idx;
          if (++odo[idx] < family[idx].size()) {
            rolled = false;
            break;
          }
          odo[idx] = 0;
        }
        if (rolled) return true;
      }
    };
    // Families are unordered; enumerate with increasing subset indices.
    auto extend = [&](auto&& self, std::size_t start, std::uint32_t used) -> bool {
      if (chosen.size() == uniformity) return spans_complete();
      for (std::size_t i = start; i < subsets.size(); ++i) {
        if ((subsets[i].first & used) != 0) continue;
        chosen.push_back(i);
        family[chosen.size() - 1] = subsets[i].second;
        if (self(self, i + 1, used | subsets[i].first)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(extend, 0, 0)) return size;
  }
  return 0;
}

}  // namespace kpartite
