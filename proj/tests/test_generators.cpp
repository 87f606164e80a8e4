#include <cstdint>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "kpartite/bigint.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/generators.hpp"
#include "kpartite/hypergraph.hpp"
#include "kpartite/verifier.hpp"

using kpartite::GenKind;
using kpartite::GenSpec;
using kpartite::Hypergraph;
using kpartite::Rational;
using kpartite::generate;
using kpartite::verify_witness;

namespace {

std::vector<std::uint64_t> collect_ranks(const Hypergraph& h) {
  std::vector<std::uint64_t> ranks;
  h.for_each_rank([&](std::uint64_t r) { ranks.push_back(r); });
  return ranks;
}

std::vector<std::uint64_t> recount_degrees(const Hypergraph& h) {
  std::vector<std::uint64_t> recount(h.vertex_count(), 0);
  h.for_each_edge([&](std::span<const std::uint32_t> edge) {
    for (std::uint32_t v : edge) ++recount[v];
  });
  return recount;
}

GenSpec binomial_spec(std::uint32_t n, std::uint32_t k, Rational p, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = GenKind::kBinomial;
  spec.vertex_count = n;
  spec.uniformity = k;
  spec.inclusion_probability = p;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("complete and empty kinds") {
  GenSpec spec;
  spec.vertex_count = 7;
  spec.uniformity = 3;
  spec.kind = GenKind::kComplete;
  CHECK(generate(spec).edge_count() == 35);
  spec.kind = GenKind::kEmpty;
  CHECK(generate(spec).edge_count() == 0);
  spec.uniformity = 0;
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);
  spec.uniformity = 8;
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);
}

TEST_CASE("binomial draws are a pure function of the request") {
  auto spec = binomial_spec(40, 2, Rational(1, 3), 7);
  Hypergraph first = generate(spec);
  Hypergraph second = generate(spec);
  CHECK(collect_ranks(first) == collect_ranks(second));
  CHECK(first.degrees() == second.degrees());

  spec.seed = 8;
  CHECK(collect_ranks(generate(spec)) != collect_ranks(first));
}

TEST_CASE("binomial edge probabilities hit the boundary cases") {
  auto one = binomial_spec(30, 2, Rational(1), 4);
  CHECK(generate(one).edge_count() == 435);
  auto zero = binomial_spec(30, 2, Rational(0), 4);
  CHECK(generate(zero).edge_count() == 0);
  auto bad = binomial_spec(30, 2, Rational(5, 4), 4);
  CHECK_THROWS_AS(generate(bad), kpartite::InvalidArguments);
  auto negative = binomial_spec(30, 2, Rational(-1, 4), 4);
  CHECK_THROWS_AS(generate(negative), kpartite::InvalidArguments);
}

TEST_CASE("binomial degree hints agree with a recount") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Hypergraph h = generate(binomial_spec(25, 3, Rational(2, 5), seed));
    CHECK(h.degrees() == recount_degrees(h));
  }
}

TEST_CASE("binomial density concentrates around the probability") {
  int close = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Hypergraph h = generate(binomial_spec(200, 2, Rational(1, 2), seed));
    Rational gap = h.density() - Rational(1, 2);
    if (gap < 0) gap = -gap;
    if (gap < Rational(1, 20)) ++close;
  }
  CHECK(close >= 95);
}

TEST_CASE("binomial output does not depend on the storage backend") {
  auto spec = binomial_spec(24, 2, Rational(3, 7), 11);
  Hypergraph dense = generate(spec);
  CHECK(dense.backend() == kpartite::EdgeStoreKind::kRankBitset);
  setenv("PARTITE_MEM_BUDGET_BITS", "8", 1);
  Hypergraph sparse = generate(spec);
  unsetenv("PARTITE_MEM_BUDGET_BITS");
  CHECK(sparse.backend() == kpartite::EdgeStoreKind::kSortedIndex);
  CHECK(collect_ranks(dense) == collect_ranks(sparse));
  CHECK(dense.degrees() == sparse.degrees());
}

TEST_CASE("exact count gives exactly the requested edges") {
  GenSpec spec;
  spec.kind = GenKind::kExactCount;
  spec.vertex_count = 12;
  spec.uniformity = 3;
  for (std::uint64_t target : {0ull, 1ull, 50ull, 219ull, 220ull}) {
    spec.edge_target = target;
    spec.seed = target + 3;
    Hypergraph h = generate(spec);
    CHECK(h.edge_count() == target);
    CHECK(h.degrees() == recount_degrees(h));
  }
  spec.edge_target = 221;  // universe is C(12,3) = 220
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);

  spec.edge_target = 60;
  spec.seed = 5;
  Hypergraph first = generate(spec);
  Hypergraph second = generate(spec);
  CHECK(collect_ranks(first) == collect_ranks(second));
  spec.seed = 6;
  CHECK(collect_ranks(generate(spec)) != collect_ranks(first));
}

TEST_CASE("exact count samples every rank eventually") {
  // With 3 of 6 possible edges per draw, 60 seeds cover the universe.
  GenSpec spec;
  spec.kind = GenKind::kExactCount;
  spec.vertex_count = 4;
  spec.uniformity = 2;
  spec.edge_target = 3;
  std::vector<int> seen(6, 0);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    spec.seed = seed;
    for (std::uint64_t r : collect_ranks(generate(spec))) seen[r] = 1;
  }
  for (int flag : seen) CHECK(flag == 1);
}

TEST_CASE("planted instances contain their blocks as a valid witness") {
  GenSpec spec;
  spec.kind = GenKind::kPlanted;
  spec.vertex_count = 20;
  spec.uniformity = 3;
  spec.planted_part_size = 4;
  spec.seed = 9;
  for (std::uint64_t noise : {0ull, 10ull, 500ull}) {
    spec.noise_removals = noise;
    Hypergraph h = generate(spec);
    CHECK(h.edge_count() == 1140 - noise);  // C(20,3) minus the removals
    CHECK(h.degrees() == recount_degrees(h));
    std::vector<std::vector<std::uint32_t>> blocks = {
        {0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    CHECK(verify_witness(h, blocks));
  }
}

TEST_CASE("planted validation") {
  GenSpec spec;
  spec.kind = GenKind::kPlanted;
  spec.vertex_count = 6;
  spec.uniformity = 2;
  spec.planted_part_size = 0;
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);
  spec.planted_part_size = 4;  // needs 8 vertices
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);
  spec.planted_part_size = 2;
  // C(6,2) = 15, 4 transversal edges, so at most 11 removals.
  spec.noise_removals = 11;
  CHECK(generate(spec).edge_count() == 4);
  spec.noise_removals = 12;
  CHECK_THROWS_AS(generate(spec), kpartite::InvalidArguments);
}
