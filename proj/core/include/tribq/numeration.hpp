#pragma once

// Tribonacci numeration: T_n, binary Tribonacci representations, the greedy
// canonical form and the left-to-right 0111 -> 1000 normalization.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tribq {

using BigUint = boost::multiprecision::cpp_int;

/// A binary Tribonacci representation e_1 ... e_i, most significant digit
/// first. The digit e_j carries weight T_{i-j}. Zero is the empty string.
class TribRepr {
 public:
  TribRepr() = default;

  /// Throws std::invalid_argument on any character other than '0' or '1'.
  explicit TribRepr(std::string_view bits);

  [[nodiscard]] const std::string& bits() const noexcept { return bits_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

  /// Digit at 0-based position i from the left.
  [[nodiscard]] int digit(std::size_t i) const { return bits_.at(i) == '1' ? 1 : 0; }

  /// No "111" substring and no leading zero.
  [[nodiscard]] bool is_canonical() const noexcept;

  /// The first len digits (all of them if len >= size()).
  [[nodiscard]] TribRepr prefix(std::size_t len) const;

  /// Concatenation this . suffix.
  [[nodiscard]] TribRepr append(std::string_view suffix) const;

  /// Left-pad with zeros to the given width; no-op when already that long.
  [[nodiscard]] TribRepr padded(std::size_t width) const;

  friend auto operator<=>(const TribRepr&, const TribRepr&) = default;

 private:
  std::string bits_;
};

/// Largest n with T_n < 2^64.
inline constexpr int kMaxTribonacciU64 = 72;

/// T_n for n >= -3, exact. Throws std::out_of_range for n < -3.
/// Values are memoized; concurrent callers are safe.
[[nodiscard]] BigUint tribonacci(int n);

/// T_n as a 64-bit integer; n must lie in [-3, kMaxTribonacciU64].
[[nodiscard]] std::uint64_t tribonacci_u64(int n);

/// [E]_T = sum_j e_j T_{i-j}. Any binary string is accepted, including
/// non-canonical ones and ones with leading zeros.
[[nodiscard]] BigUint eval_repr(const TribRepr& e);

/// Same as eval_repr but in 64 bits; throws std::overflow_error when the
/// value does not fit.
[[nodiscard]] std::uint64_t eval_repr_u64(const TribRepr& e);

/// (n)_T, the greedy representation.
[[nodiscard]] TribRepr canonical_repr(std::uint64_t n);
[[nodiscard]] TribRepr canonical_repr(const BigUint& n);

/// Canonical form of [E]_T obtained by repeatedly rewriting the leftmost
/// 0111 as 1000 (a leading 111 counts as 0111), then dropping leading zeros.
[[nodiscard]] TribRepr normalize(const TribRepr& e);

/// Every intermediate string of normalize(), starting with the input and
/// ending with the string just before leading zeros are stripped.
[[nodiscard]] std::vector<TribRepr> normalize_trace(const TribRepr& e);

/// U_m: zero-padded canonical representations of 0 .. T_m - 1 in numeric
/// order. Throws std::length_error for m > 36.
[[nodiscard]] std::vector<TribRepr> enumerate_reprs(unsigned m);

}  // namespace tribq
