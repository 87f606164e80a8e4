#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "kpartite/bigint.hpp"
#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/hypergraph.hpp"
#include "kpartite/prng.hpp"
#include "support/oracles.hpp"

using kpartite::BigInt;
using kpartite::EdgeStoreKind;
using kpartite::Hypergraph;
using kpartite::Rational;
using kpartite::SplitMix64Stream;
using kpartite::binomial;
using kpartite::colex_rank;
using kpartite::testing::oracle_link_sets;

namespace {

// Random rank subset of the full universe, one coin per rank.
std::vector<std::uint64_t> random_ranks(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  const std::uint64_t universe = binomial(n, k).convert_to<std::uint64_t>();
  SplitMix64Stream stream(seed);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < universe; ++r) {
    if (stream.next() & 1) ranks.push_back(r);
  }
  return ranks;
}

}  // namespace

TEST_CASE("build canonicalizes and validates edges") {
  Hypergraph h = Hypergraph::build(6, 3, {{5, 0, 2}, {1, 2, 3}, {2, 0, 5}});
  CHECK(h.edge_count() == 2);  // the duplicate collapses
  CHECK(h.contains_edge(std::vector<std::uint32_t>{0, 2, 5}));
  CHECK(h.contains_edge(std::vector<std::uint32_t>{5, 2, 0}));
  CHECK(h.contains_edge(std::vector<std::uint32_t>{3, 1, 2}));
  CHECK_FALSE(h.contains_edge(std::vector<std::uint32_t>{0, 1, 2}));

  CHECK_THROWS_AS(Hypergraph::build(6, 3, {{0, 1}}), kpartite::InvalidSubset);
  CHECK_THROWS_AS(Hypergraph::build(6, 3, {{0, 1, 1}}), kpartite::NotASet);
  CHECK_THROWS_AS(Hypergraph::build(6, 3, {{0, 1, 6}}), kpartite::VertexOutOfRange);
  CHECK_THROWS_AS(h.contains_edge(std::vector<std::uint32_t>{0, 1}), kpartite::InvalidSubset);
  CHECK_THROWS_AS(h.contains_edge(std::vector<std::uint32_t>{0, 6, 1}),
                  kpartite::VertexOutOfRange);
}

TEST_CASE("complete graph has every edge and uniform degrees") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    Hypergraph h = Hypergraph::complete(9, k);
    CHECK(BigInt(h.edge_count()) == binomial(9, k));
    CHECK(h.density() == Rational(1));
    for (std::uint32_t v = 0; v < 9; ++v) {
      CHECK(BigInt(h.degree(v)) == binomial(8, k - 1));
    }
    for (std::uint64_t r = 0; r < h.edge_count(); ++r) CHECK(h.contains_rank(r));
  }
}

TEST_CASE("degrees sum to uniformity times edge count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Hypergraph h = Hypergraph::from_ranks(10, 3, random_ranks(10, 3, seed));
    std::uint64_t total = std::accumulate(h.degrees().begin(), h.degrees().end(),
                                          std::uint64_t{0});
    CHECK(total == 3 * h.edge_count());

    // Per-vertex recount straight from the edge list.
    std::vector<std::uint64_t> recount(10, 0);
    h.for_each_edge([&](std::span<const std::uint32_t> edge) {
      for (std::uint32_t v : edge) ++recount[v];
    });
    CHECK(recount == h.degrees());
  }
}

TEST_CASE("top degree vertices prefer high degree then low id") {
  Hypergraph h = Hypergraph::build(6, 2, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {2, 3}});
  // degrees: 0->3, 1->1, 2->2, 3->2, 4->1, 5->1
  CHECK(h.top_degree_vertices(1) == std::vector<std::uint32_t>{0});
  CHECK(h.top_degree_vertices(3) == std::vector<std::uint32_t>{0, 2, 3});
  CHECK(h.top_degree_vertices(4) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(h.top_degree_vertices(6) == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(h.top_degree_vertices(7), kpartite::InvalidArguments);
}

TEST_CASE("top degree pool always carries at least its share of incidences") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Hypergraph h = Hypergraph::from_ranks(11, 2, random_ranks(11, 2, seed));
    for (std::uint64_t count = 1; count <= 11; ++count) {
      auto pool = h.top_degree_vertices(count);
      BigInt pool_sum = 0;
      for (std::uint32_t v : pool) pool_sum += h.degree(v);
      // count / n of all incidences, compared exactly.
      CHECK(pool_sum * 11 >= BigInt(count) * 2 * h.edge_count());
    }
  }
}

TEST_CASE("link sets match the brute force definition") {
  for (std::uint32_t k = 2; k <= 3; ++k) {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
      Hypergraph h = Hypergraph::from_ranks(8, k, random_ranks(8, k, seed));
      std::vector<std::vector<std::uint32_t>> anchor_sets = {{0}, {3}, {7}, {1, 4}, {0, 7}};
      for (const auto& anchors : anchor_sets) {
        auto got = h.link_set(anchors);
        auto expected = oracle_link_sets(h, anchors);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          CHECK(BigInt(got[i]) == colex_rank(expected[i]));
        }
      }
    }
  }
}

TEST_CASE("link set argument validation") {
  Hypergraph h = Hypergraph::complete(5, 2);
  CHECK_THROWS_AS(h.link_set(std::vector<std::uint32_t>{}), kpartite::InvalidArguments);
  CHECK_THROWS_AS(h.link_set(std::vector<std::uint32_t>{2, 1}), kpartite::InvalidSubset);
  CHECK_THROWS_AS(h.link_set(std::vector<std::uint32_t>{5}), kpartite::VertexOutOfRange);
  Hypergraph unary = Hypergraph::complete(5, 1);
  CHECK_THROWS_AS(unary.link_set(std::vector<std::uint32_t>{0}), kpartite::InvalidArguments);
}

TEST_CASE("both backends answer identically") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto ranks = random_ranks(12, k, seed * 977 + k);
      Hypergraph dense = Hypergraph::from_ranks(12, k, ranks, EdgeStoreKind::kRankBitset);
      Hypergraph sparse = Hypergraph::from_ranks(12, k, ranks, EdgeStoreKind::kSortedIndex);
      CHECK(dense.backend() == EdgeStoreKind::kRankBitset);
      CHECK(sparse.backend() == EdgeStoreKind::kSortedIndex);
      CHECK(dense.edge_count() == sparse.edge_count());
      CHECK(dense.degrees() == sparse.degrees());
      const std::uint64_t universe = binomial(12, k).convert_to<std::uint64_t>();
      for (std::uint64_t r = 0; r < universe; ++r) {
        CHECK(dense.contains_rank(r) == sparse.contains_rank(r));
      }
      CHECK(dense.link_set(std::vector<std::uint32_t>{2}) ==
            sparse.link_set(std::vector<std::uint32_t>{2}));
      CHECK(dense.top_degree_vertices(5) == sparse.top_degree_vertices(5));
    }
  }
}

TEST_CASE("memory budget decides the automatic backend") {
  unsetenv("PARTITE_MEM_BUDGET_BITS");
  CHECK(kpartite::edge_store_bit_budget() == (std::uint64_t{1} << 33));

  setenv("PARTITE_MEM_BUDGET_BITS", "32", 1);
  CHECK(kpartite::edge_store_bit_budget() == 32);
  // 12 choose 2 = 66 ranks exceed a 32 bit budget.
  Hypergraph sparse = Hypergraph::from_ranks(12, 2, random_ranks(12, 2, 5));
  CHECK(sparse.backend() == EdgeStoreKind::kSortedIndex);

  setenv("PARTITE_MEM_BUDGET_BITS", "definitely-not-a-number", 1);
  CHECK(kpartite::edge_store_bit_budget() == (std::uint64_t{1} << 33));

  unsetenv("PARTITE_MEM_BUDGET_BITS");
  Hypergraph dense = Hypergraph::from_ranks(12, 2, random_ranks(12, 2, 5));
  CHECK(dense.backend() == EdgeStoreKind::kRankBitset);
}

TEST_CASE("rank list validation in from_ranks") {
  CHECK_THROWS_AS(Hypergraph::from_ranks(5, 2, {3, 3}), kpartite::InvalidArguments);
  CHECK_THROWS_AS(Hypergraph::from_ranks(5, 2, {4, 1}), kpartite::InvalidArguments);
  CHECK_THROWS_AS(Hypergraph::from_ranks(5, 2, {10}), kpartite::InvalidArguments);
  Hypergraph h = Hypergraph::from_ranks(5, 2, {0, 9});
  CHECK(h.edge_count() == 2);
}

TEST_CASE("bitset word boundaries") {
  for (std::uint64_t size : {1ull, 63ull, 64ull, 65ull, 128ull, 130ull}) {
    kpartite::DynamicBitset bits(size);
    CHECK(bits.count() == 0);
    bits.set_all();
    CHECK(bits.count() == size);  // tail bits past the end must stay clear
    CHECK(bits.find_first() == 0);
    bits.reset(size - 1);
    CHECK(bits.count() == size - 1);
    CHECK_FALSE(bits.test(size - 1));
    bits.clear();
    CHECK(bits.find_first() == kpartite::DynamicBitset::npos);
    bits.set(size - 1);
    CHECK(bits.find_first() == size - 1);
    CHECK(bits.find_next(size - 1) == kpartite::DynamicBitset::npos);
  }
}

TEST_CASE("density is the exact edge fraction") {
  Hypergraph h = Hypergraph::build(5, 2, {{0, 1}, {2, 3}, {0, 4}});
  CHECK(h.density() == Rational(3, 10));
  Hypergraph tiny(Hypergraph::build(3, 3, {}));
  CHECK(tiny.density() == Rational(0));
}
