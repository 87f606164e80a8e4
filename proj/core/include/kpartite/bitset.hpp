#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kpartite {

// Flat bitset sized at runtime. std::vector<bool> hides its words, which
// rules out the word-at-a-time intersection and scan loops below, so this
// keeps an explicit vector<uint64_t>.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::uint64_t bit_count)
      : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

  std::uint64_t size() const { return bit_count_; }

  bool test(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (std::uint64_t tail = bit_count_ & 63; tail != 0 && !words_.empty()) {
      words_.back() = (std::uint64_t{1} << tail) - 1;
    }
  }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  // this &= other. Sizes must match.
  void and_with(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }

  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  std::uint64_t find_first() const { return scan_from(0); }

  // First set bit strictly after i, or npos.
  std::uint64_t find_next(std::uint64_t i) const {
    ++i;
    if (i >= bit_count_) return npos;
    std::uint64_t word_idx = i >> 6;
    std::uint64_t w = words_[word_idx] >> (i & 63);
    if (w != 0) return i + std::countr_zero(w);
    return scan_from((word_idx + 1) << 6);
  }

 private:
  std::uint64_t scan_from(std::uint64_t start_bit) const {
    for (std::uint64_t wi = start_bit >> 6; wi < words_.size(); ++wi) {
      if (words_[wi] != 0) {
        std::uint64_t bit = (wi << 6) + std::countr_zero(words_[wi]);
        return bit < bit_count_ ? bit : npos;
      }
    }
    return npos;
  }

  std::uint64_t bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kpartite
