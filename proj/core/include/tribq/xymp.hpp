#pragma once

// The XYMP table: X_n = mex{X_i, Y_i : i < n}, M_n = mex{M_i, P_i : i < n},
// Y_n = X_n + M_n, P_n = X_n + Y_n, with row 0 all zeros.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribq/word.hpp"

namespace tribq {

struct XympRow {
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t m = 0;
  std::uint64_t p = 0;

  friend bool operator==(const XympRow&, const XympRow&) = default;
};

enum class XympColumn { x, y, m, p };

/// Thrown when a proven structural statement fails on computed data.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class XympTable {
 public:
  /// Rows 0 .. count-1 from the two mex recurrences. O(count) time.
  [[nodiscard]] static XympTable build_mex(std::size_t count);

  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const XympRow& operator[](std::size_t n) const { return rows_[n]; }
  [[nodiscard]] const XympRow& at(std::size_t n) const { return rows_.at(n); }
  [[nodiscard]] const std::vector<XympRow>& rows() const noexcept { return rows_; }

  [[nodiscard]] std::uint64_t column(XympColumn which, std::size_t n) const;

 private:
  std::vector<XympRow> rows_;
};

/// Row n from the A/B/C closed forms: X = B-A, Y = C-B, M = C-2B+A, P = C-A.
[[nodiscard]] XympRow row_closed(std::uint64_t n);

/// Label of row n from (dX, dY, dM, dP): (2,3,1,5) -> a, (1,3,2,4) -> b,
/// (1,2,1,3) -> c. Needs row n+1. Any other quadruple throws
/// InvariantViolation.
[[nodiscard]] Letter label_row(const XympTable& table, std::size_t n);

/// First `count` differences of a column (needs count+1 rows).
[[nodiscard]] std::vector<std::int64_t> delta_stream(const XympTable& table, XympColumn which,
                                                     std::size_t count);

/// The letter values for which the column's differences are Theta(x, y, z):
/// X (2,1,1), Y (3,3,2), M (1,2,1), P (5,4,3).
[[nodiscard]] std::array<std::int64_t, 3> theme_values(XympColumn which);

[[nodiscard]] std::string column_name(XympColumn which);

}  // namespace tribq
