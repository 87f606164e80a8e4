#include <cstdint>

#include "doctest.h"
#include "kpartite/bigint.hpp"
#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/hypergraph.hpp"
#include "kpartite/parameters.hpp"

using kpartite::BigInt;
using kpartite::Hypergraph;
using kpartite::ParamSet;
using kpartite::Rational;
using kpartite::compute_link_threshold;
using kpartite::compute_part_size;
using kpartite::compute_pool_size;
using kpartite::derive_params;

namespace {

// One row of independently computed expectations (exact integer arithmetic,
// frozen from a reference computation).
struct Expected {
  std::uint64_t vertex_count;
  std::int64_t density_num;
  std::int64_t density_den;
  std::uint32_t uniformity;
  std::uint64_t part_size;
  const char* pool_size;
  const char* link_threshold;
};

constexpr Expected kExpected[] = {
    {4096, 1, 1, 2, 3, "12", "64"},
    {16, 1, 1, 2, 1, "4", "4"},
    {255, 1, 1, 2, 1, "4", "64"},
    {256, 1, 1, 2, 2, "8", "16"},
    {4095, 1, 1, 2, 2, "8", "256"},
    {65536, 1, 1, 2, 4, "16", "256"},
    {1024, 1, 2, 2, 2, "16", "16"},
    {1023, 1, 2, 2, 1, "8", "128"},
    {456, 3, 4, 2, 2, "11", "17"},
    {455, 3, 4, 2, 1, "6", "86"},
    {65536, 1, 1, 3, 2, "8", "134215680"},
    {65535, 1, 1, 3, 1, "4", "536846337"},
    {1000000, 1, 1, 5, 1, "4", "10416604166781249937500"},
    {1000000, 1, 1, 4, 1, "4", "41666541666750000"},
    {100, 1, 4950, 2, 0, "0", "100"},
    {60, 1, 1, 3, 1, "4", "443"},
    {8192, 3, 10, 2, 2, "27", "47"},
    {1000000000, 99, 100, 3, 2, "9", "30628124969371875"},
};

}  // namespace

TEST_CASE("derived parameters match the frozen reference values") {
  for (const Expected& row : kExpected) {
    CAPTURE(row.vertex_count);
    CAPTURE(row.uniformity);
    Rational density(row.density_num, row.density_den);
    std::uint64_t part_size =
        compute_part_size(row.vertex_count, density, row.uniformity);
    CHECK(part_size == row.part_size);
    CHECK(compute_pool_size(part_size, density) == BigInt(row.pool_size));
    CHECK(compute_link_threshold(row.vertex_count, row.uniformity, density, part_size) ==
          BigInt(row.link_threshold));
  }
}

TEST_CASE("part size sits exactly at the feasibility boundary") {
  // t is the largest value with (16/d)^(t^(k-1)) <= n; check both sides of
  // the boundary with exact big integer powers.
  for (const Expected& row : kExpected) {
    Rational density(row.density_num, row.density_den);
    const BigInt num = numerator(density);
    const BigInt den = denominator(density);
    auto feasible = [&](std::uint64_t candidate) {
      unsigned e = 1;
      for (std::uint32_t i = 1; i < row.uniformity; ++i) e *= static_cast<unsigned>(candidate);
      return pow(BigInt(16) * den, e) <= BigInt(row.vertex_count) * pow(num, e);
    };
    if (row.part_size > 0) CHECK(feasible(row.part_size));
    CHECK_FALSE(feasible(row.part_size + 1));
  }
}

TEST_CASE("part size is monotone in the vertex count and density") {
  Rational half(1, 2);
  std::uint64_t previous = 0;
  for (std::uint64_t n = 2; n <= 1u << 20; n <<= 1) {
    std::uint64_t t = compute_part_size(n, half, 2);
    CHECK(t >= previous);
    previous = t;
  }
  for (std::int64_t num = 1; num < 16; ++num) {
    CHECK(compute_part_size(100000, Rational(num, 16), 2) <=
          compute_part_size(100000, Rational(num + 1, 16), 2));
    CHECK(compute_part_size(100000, Rational(num, 16), 3) <=
          compute_part_size(100000, Rational(num + 1, 16), 3));
  }
}

TEST_CASE("parameter validation") {
  Rational one(1);
  CHECK_THROWS_AS(compute_part_size(0, one, 2), kpartite::InvalidArguments);
  CHECK_THROWS_AS(compute_part_size(100, one, 1), kpartite::InvalidArguments);
  CHECK_THROWS_AS(compute_part_size(100, Rational(0), 2), kpartite::NoEdges);
  CHECK_THROWS_AS(compute_part_size(100, Rational(3, 2), 2), kpartite::InvalidDensity);
  CHECK_THROWS_AS(compute_link_threshold(100, 1, one, 2), kpartite::InvalidArguments);
}

TEST_CASE("derive_params reads everything off the graph") {
  Hypergraph h = Hypergraph::complete(4096, 2);
  ParamSet params = derive_params(h);
  CHECK(params.vertex_count == 4096);
  CHECK(params.edge_count == 8386560);
  CHECK(params.uniformity == 2);
  CHECK(params.density == Rational(1));
  CHECK(params.part_size == 3);
  CHECK(params.pool_size == 12);
  CHECK(params.link_threshold == 64);

  Hypergraph empty = Hypergraph::build(10, 2, {});
  CHECK_THROWS_AS(derive_params(empty), kpartite::NoEdges);
  Hypergraph unary = Hypergraph::complete(10, 1);
  CHECK_THROWS_AS(derive_params(unary), kpartite::InvalidArguments);
}

TEST_CASE("huge sparse inputs settle quickly on a zero part size") {
  // The feasibility test must not build gigantic powers when the answer is
  // plainly zero; this would hang if it tried.
  Rational tiny(1, BigInt("1000000000000000000000000000000"));
  CHECK(compute_part_size(1000000, tiny, 5) == 0);
  CHECK(compute_part_size(18446744073709551615ull, Rational(1), 5) == 1);
}
