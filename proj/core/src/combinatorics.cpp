#include "kpartite/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "kpartite/errors.hpp"

namespace kpartite {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kU64Max - b ? kU64Max : a + b;
}

void require_strictly_increasing(std::span<const std::uint32_t> subset) {
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (subset[i - 1] >= subset[i]) {
      throw InvalidSubset("subset is not strictly increasing");
    }
  }
}

}  // namespace

BigInt binomial(std::uint64_t element_count, std::uint64_t subset_size) {
  if (subset_size > element_count) return 0;
  // Use the smaller complementary size; product form keeps every
  // intermediate value an exact integer.
  std::uint64_t pick = std::min(subset_size, element_count - subset_size);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= pick; ++i) {
    result *= element_count - pick + i;
    result /= i;
  }
  return result;
}

BigInt colex_rank(std::span<const std::uint32_t> subset) {
  require_strictly_increasing(subset);
  BigInt rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += binomial(subset[i], static_cast<std::uint64_t>(i) + 1);
  }
  return rank;
}

std::vector<std::uint32_t> colex_unrank(const BigInt& rank, std::uint32_t subset_size) {
  if (rank < 0) throw InvalidArguments("rank must be non-negative");
  std::vector<std::uint32_t> out(subset_size);
  BigInt remaining = rank;
  for (std::uint32_t j = subset_size; j >= 1; --j) {
    // Largest c with C(c, j) <= remaining: double then binary search.
    std::uint64_t lo = j - 1;
    std::uint64_t hi = lo + 1;
    while (binomial(hi, j) <= remaining) {
      lo = hi;
      hi *= 2;
    }
    while (lo + 1 < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (binomial(mid, j) <= remaining) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out[j - 1] = static_cast<std::uint32_t>(lo);
    remaining -= binomial(lo, j);
  }
  return out;
}

bool next_subset_colex(std::span<std::uint32_t> subset, std::uint32_t universe) {
  const std::size_t size = subset.size();
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t limit = (i + 1 < size) ? subset[i + 1] : universe;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  for (std::size_t j = 0; j < size; ++j) subset[j] = static_cast<std::uint32_t>(j);
  return false;
}

SubsetCursor::SubsetCursor(std::vector<std::uint32_t> ground, std::uint32_t subset_size)
    : ground_(std::move(ground)) {
  if (subset_size > ground_.size()) {
    throw InvalidArguments("subset size exceeds ground list size");
  }
  std::vector<std::uint32_t> sorted = ground_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NotASet("ground list contains a repeated id");
  }
  indices_.resize(subset_size);
  std::iota(indices_.begin(), indices_.end(), 0u);
  values_.resize(subset_size);
  for (std::uint32_t i = 0; i < subset_size; ++i) values_[i] = ground_[i];
}

void SubsetCursor::advance() {
  if (done_) return;
  const std::size_t size = indices_.size();
  const std::uint32_t universe = static_cast<std::uint32_t>(ground_.size());
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t limit = (i + 1 < size) ? indices_[i + 1] : universe;
    if (indices_[i] + 1 < limit) {
      ++indices_[i];
      values_[i] = ground_[indices_[i]];
      for (std::size_t j = 0; j < i; ++j) {
        indices_[j] = static_cast<std::uint32_t>(j);
        values_[j] = ground_[j];
      }
      return;
    }
  }
  done_ = true;
}

ColexTable::ColexTable(std::uint32_t vertex_count, std::uint32_t subset_size)
    : n_(vertex_count), k_(subset_size) {
  BigInt exact = binomial(n_, k_);
  if (exact >= (BigInt(1) << 63)) {
    throw InstanceTooLarge("C(" + std::to_string(n_) + ", " + std::to_string(k_) +
                           ") exceeds the 2^63 rank-addressable limit");
  }
  universe_ = exact.convert_to<std::uint64_t>();
  rows_.assign(k_ + 1, std::vector<std::uint64_t>(n_ + 1, 0));
  for (std::uint32_t c = 0; c <= n_; ++c) rows_[0][c] = 1;
  for (std::uint32_t j = 1; j <= k_; ++j) {
    for (std::uint32_t c = j; c <= n_; ++c) {
      rows_[j][c] = saturating_add(rows_[j][c - 1], rows_[j - 1][c - 1]);
    }
  }
}

std::uint64_t ColexTable::rank_of(std::span<const std::uint32_t> subset) const {
  if (subset.size() != k_) {
    throw InvalidSubset("subset has the wrong cardinality for this universe");
  }
  require_strictly_increasing(subset);
  if (k_ > 0 && subset.back() >= n_) {
    throw VertexOutOfRange("subset id " + std::to_string(subset.back()) +
                           " is outside a " + std::to_string(n_) + "-vertex universe");
  }
  std::uint64_t rank = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    rank += rows_[i + 1][subset[i]];
  }
  return rank;
}

void ColexTable::unrank(std::uint64_t rank, std::span<std::uint32_t> out) const {
  if (out.size() != k_) {
    throw InvalidSubset("output span has the wrong cardinality for this universe");
  }
  if (rank >= universe_) {
    throw InvalidArguments("rank is outside this universe");
  }
  std::uint64_t remaining = rank;
  std::uint32_t hi = n_ - 1;
  for (std::uint32_t j = k_; j >= 1; --j) {
    // Largest c in [j-1, hi] with C(c, j) <= remaining. Saturated table
    // entries exceed any valid remaining value, so they sort correctly.
    std::uint32_t lo = j - 1;
    std::uint32_t top = hi;
    while (lo < top) {
      std::uint32_t mid = lo + (top - lo + 1) / 2;
      if (rows_[j][mid] <= remaining) {
        lo = mid;
      } else {
        top = mid - 1;
      }
    }
    out[j - 1] = lo;
    remaining -= rows_[j][lo];
    hi = lo == 0 ? 0 : lo - 1;
  }
}

}  // namespace kpartite
