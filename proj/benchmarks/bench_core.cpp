// Microbenchmarks for the hot paths: subset streaming, rank lookups in both
// storage backends, link-set extraction, generation, and the full finder.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "kpartite/combinatorics.hpp"
#include "kpartite/finder.hpp"
#include "kpartite/generators.hpp"
#include "kpartite/hypergraph.hpp"
#include "kpartite/prng.hpp"

using namespace kpartite;

namespace {

Hypergraph half_density_pairs(std::uint32_t n, EdgeStoreKind kind) {
  GenSpec spec;
  spec.kind = GenKind::kBinomial;
  spec.vertex_count = n;
  spec.uniformity = 2;
  spec.inclusion_probability = Rational(1, 2);
  spec.seed = 7;
  Hypergraph generated = generate(spec);
  std::vector<std::uint64_t> ranks;
  generated.for_each_rank([&](std::uint64_t r) { ranks.push_back(r); });
  return Hypergraph::from_ranks(n, 2, std::move(ranks), kind);
}

void BM_SubsetCursor(benchmark::State& state) {
  std::vector<std::uint32_t> ground(static_cast<std::uint32_t>(state.range(0)));
  std::iota(ground.begin(), ground.end(), 0u);
  for (auto _ : state) {
    std::uint64_t visited = 0;
    for (SubsetCursor cursor(ground, 4); !cursor.done(); cursor.advance()) {
      benchmark::DoNotOptimize(cursor.current().data());
      ++visited;
    }
    benchmark::DoNotOptimize(visited);
  }
}
BENCHMARK(BM_SubsetCursor)->Arg(16)->Arg(24);

void BM_RankUnrank(benchmark::State& state) {
  ColexTable table(4096, 2);
  std::vector<std::uint32_t> subset(2);
  std::uint64_t rank = 12345;
  for (auto _ : state) {
    table.unrank(rank, subset);
    rank = table.rank_of(subset) + 9973;
    if (rank >= table.universe()) rank -= table.universe();
    benchmark::DoNotOptimize(rank);
  }
}
BENCHMARK(BM_RankUnrank);

void BM_ContainsRank(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? EdgeStoreKind::kRankBitset
                                        : EdgeStoreKind::kSortedIndex;
  Hypergraph graph = half_density_pairs(2048, kind);
  SplitMix64Stream stream(3);
  const std::uint64_t universe = graph.table().universe();
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph.contains_rank(stream.next() % universe));
  }
}
BENCHMARK(BM_ContainsRank)->Arg(0)->Arg(1);

void BM_LinkSet(benchmark::State& state) {
  Hypergraph graph = half_density_pairs(static_cast<std::uint32_t>(state.range(0)),
                                        EdgeStoreKind::kRankBitset);
  const std::vector<std::uint32_t> anchors = {10, 20};
  for (auto _ : state) {
    auto links = graph.link_set(anchors);
    benchmark::DoNotOptimize(links.data());
  }
}
BENCHMARK(BM_LinkSet)->Arg(512)->Arg(2048);

void BM_GenerateBinomial(benchmark::State& state) {
  GenSpec spec;
  spec.kind = GenKind::kBinomial;
  spec.vertex_count = static_cast<std::uint32_t>(state.range(0));
  spec.uniformity = 2;
  spec.inclusion_probability = Rational(1, 2);
  spec.seed = 11;
  for (auto _ : state) {
    Hypergraph graph = generate(spec);
    benchmark::DoNotOptimize(graph.edge_count());
  }
}
BENCHMARK(BM_GenerateBinomial)->Arg(512)->Arg(2048);

void BM_FindComplete(benchmark::State& state) {
  Hypergraph graph = Hypergraph::complete(static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) {
    FindResult result = find_partite(graph);
    benchmark::DoNotOptimize(result.witness.parts.size());
  }
}
BENCHMARK(BM_FindComplete)->Arg(512)->Arg(1024)->Arg(2048)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
