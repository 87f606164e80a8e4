#include "kpartite/parameters.hpp"

#include <bit>

#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"

namespace kpartite {

namespace {

void validate_density(const Rational& density) {
  if (density <= 0) throw NoEdges("density is zero; the search is undefined");
  if (density > 1) throw InvalidDensity("density exceeds 1");
}

// Does candidate satisfy candidate^(uniformity-1) * ln(16/density) <= ln(n)?
// Equivalent, by exponentiating, to (16*den)^e <= n * num^e with
// e = candidate^(uniformity-1) and density = num/den.
bool part_size_feasible(std::uint64_t vertex_count, const Rational& density,
                        std::uint32_t uniformity, std::uint64_t candidate) {
  if (candidate == 0) return true;
  std::uint64_t exponent = 1;
  for (std::uint32_t i = 0; i + 1 < uniformity; ++i) {
    if (exponent > 64) break;  // far beyond any feasible size already
    exponent *= candidate;
  }
  // density <= 1 makes 16^e a lower bound on the left side, so once
  // 16^e tops vertex_count the comparison is settled without big powers;
  // past this check e <= 15 and the exact powers below stay small.
  if (4 * exponent >= std::bit_width(vertex_count)) {
    return false;
  }
  const BigInt num = numerator(density);
  const BigInt den = denominator(density);
  BigInt left = pow(BigInt(16) * den, static_cast<unsigned>(exponent));
  BigInt right = BigInt(vertex_count) * pow(num, static_cast<unsigned>(exponent));
  return left <= right;
}

}  // namespace

std::uint64_t compute_part_size(std::uint64_t vertex_count, const Rational& density,
                                std::uint32_t uniformity) {
  if (vertex_count == 0) throw InvalidArguments("vertex count must be positive");
  if (uniformity < 2) throw InvalidArguments("part size needs uniformity at least 2");
  validate_density(density);
  std::uint64_t size = 0;
  while (part_size_feasible(vertex_count, density, uniformity, size + 1)) ++size;
  return size;
}

BigInt compute_pool_size(std::uint64_t part_size, const Rational& density) {
  validate_density(density);
  if (part_size == 0) return 0;
  return ceil_div(BigInt(4) * part_size * denominator(density), numerator(density));
}

BigInt compute_link_threshold(std::uint64_t vertex_count, std::uint32_t uniformity,
                              const Rational& density, std::uint64_t part_size) {
  if (uniformity < 2) throw InvalidArguments("link threshold needs uniformity at least 2");
  validate_density(density);
  BigInt slots = binomial(vertex_count, uniformity - 1);
  if (part_size == 0) return slots;
  unsigned exponent = static_cast<unsigned>(part_size);
  BigInt numerator_pow = pow(numerator(density), exponent);
  BigInt denominator_pow = pow(BigInt(4) * denominator(density), exponent);
  return ceil_div(numerator_pow * slots, denominator_pow);
}

ParamSet derive_params(const Hypergraph& graph) {
  if (graph.uniformity() < 2) {
    throw InvalidArguments("parameter derivation needs uniformity at least 2");
  }
  if (graph.edge_count() == 0) {
    throw NoEdges("the hypergraph has no edges");
  }
  ParamSet params;
  params.vertex_count = graph.vertex_count();
  params.edge_count = graph.edge_count();
  params.uniformity = graph.uniformity();
  params.density = graph.density();
  params.part_size = compute_part_size(params.vertex_count, params.density, params.uniformity);
  params.pool_size = compute_pool_size(params.part_size, params.density);
  params.link_threshold = compute_link_threshold(params.vertex_count, params.uniformity,
                                                 params.density, params.part_size);
  if (params.part_size >= 2) {
    if (params.pool_size > params.vertex_count) {
      throw InternalInvariantViolation(
          "pool size exceeds the vertex count despite part size >= 2");
    }
    if (params.link_threshold > binomial(params.vertex_count, params.uniformity - 1)) {
      throw InternalInvariantViolation("link threshold exceeds its universe");
    }
  }
  return params;
}

}  // namespace kpartite
