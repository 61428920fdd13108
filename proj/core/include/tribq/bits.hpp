#pragma once

// Growable bit structures shared by the table builders and simulators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace tribq {

/// Growable set of nonnegative integers with an incremental mex.
///
/// Values are only ever inserted, so the first-free cursor never moves
/// backwards and a sequence of mex() calls costs amortized O(1) each.
class MexSet {
 public:
  void insert(std::uint64_t v) {
    const std::size_t w = v >> 6;
    if (w >= words_.size()) {
      words_.resize(std::max(w + 1, words_.size() * 2), 0);
    }
    words_[w] |= std::uint64_t{1} << (v & 63);
  }

  [[nodiscard]] bool contains(std::uint64_t v) const {
    const std::size_t w = v >> 6;
    return w < words_.size() && ((words_[w] >> (v & 63)) & 1U) != 0;
  }

  [[nodiscard]] std::uint64_t mex() {
    while (contains(cursor_)) {
      ++cursor_;
    }
    return cursor_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t cursor_ = 0;
};

/// Bitset over a signed key range that grows on demand in both directions.
class SignedBitset {
 public:
  [[nodiscard]] bool test(std::int64_t key) const {
    const std::int64_t i = key + offset_;
    if (i < 0 || static_cast<std::uint64_t>(i) >= bits_.size() * 64) {
      return false;
    }
    const auto u = static_cast<std::uint64_t>(i);
    return ((bits_[u >> 6] >> (u & 63)) & 1U) != 0;
  }

  void set(std::int64_t key) {
    reserve(key);
    const auto u = static_cast<std::uint64_t>(key + offset_);
    bits_[u >> 6] |= std::uint64_t{1} << (u & 63);
  }

  /// Make sure keys in [lo, hi] are addressable without further growth.
  void reserve_range(std::int64_t lo, std::int64_t hi) {
    reserve(lo);
    reserve(hi);
  }

 private:
  void reserve(std::int64_t key) {
    if (key + offset_ < 0) {
      // Grow on the negative side, keeping the offset a multiple of 64.
      const std::int64_t need = -(key + offset_);
      const std::int64_t words = std::max<std::int64_t>(
          (need + 63) / 64, static_cast<std::int64_t>(bits_.size()) + 1);
      bits_.insert(bits_.begin(), static_cast<std::size_t>(words), 0);
      offset_ += words * 64;
    }
    const auto u = static_cast<std::uint64_t>(key + offset_);
    if ((u >> 6) >= bits_.size()) {
      bits_.resize(std::max((u >> 6) + 1, bits_.size() * 2), 0);
    }
  }

  std::vector<std::uint64_t> bits_;
  std::int64_t offset_ = 0;
};

/// "Next unoccupied key >= k" over keys >= min_key, via union-find with
/// path halving. Occupied keys point past themselves; free keys are roots.
class NextFree {
 public:
  explicit NextFree(std::int64_t min_key = 0) : min_key_(min_key) {}

  [[nodiscard]] std::int64_t next(std::int64_t key) {
    std::size_t i = index(key);
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return static_cast<std::int64_t>(i) + min_key_;
  }

  [[nodiscard]] bool occupied(std::int64_t key) {
    const std::size_t i = index(key);
    return parent_[i] != i;
  }

  void mark(std::int64_t key) {
    const std::size_t i = index(key);
    ensure(i + 2);
    parent_[i] = i + 1;
  }

 private:
  std::size_t index(std::int64_t key) {
    const auto i = static_cast<std::size_t>(key - min_key_);
    ensure(i + 1);
    return i;
  }

  void ensure(std::size_t n) {
    const std::size_t old = parent_.size();
    if (n <= old) {
      return;
    }
    const std::size_t grown = std::max(n, old * 2 + 64);
    parent_.resize(grown);
    for (std::size_t i = old; i < grown; ++i) {
      parent_[i] = i;
    }
  }

  std::int64_t min_key_;
  std::vector<std::size_t> parent_;
};

}  // namespace tribq
