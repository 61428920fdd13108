#pragma once

// Greedy ("exiled") queens: scan the cells of a board in numbering order and
// place a queen on every cell that no earlier queen attacks.

#include <cstdint>
#include <vector>

#include "tribq/bits.hpp"
#include "tribq/geometry.hpp"

namespace tribq {

/// Row, column, diagonal (y - x) and antidiagonal (y + x) keys in use.
class LineOccupancy {
 public:
  [[nodiscard]] bool attacked(std::int64_t x, std::int64_t y) const {
    return rows_.test(x) || cols_.test(y) || diags_.test(y - x) || antidiags_.test(y + x);
  }

  void place(std::int64_t x, std::int64_t y) {
    rows_.set(x);
    cols_.set(y);
    diags_.set(y - x);
    antidiags_.set(y + x);
  }

  [[nodiscard]] bool row_taken(std::int64_t x) const { return rows_.test(x); }
  [[nodiscard]] bool column_taken(std::int64_t y) const { return cols_.test(y); }
  [[nodiscard]] bool antidiagonal_taken(std::int64_t s) const { return antidiags_.test(s); }

 private:
  SignedBitset rows_;
  SignedBitset cols_;
  SignedBitset diags_;
  SignedBitset antidiags_;
};

template <class Coord>
struct QueenRecord {
  std::uint64_t ordinal = 0;
  std::uint64_t cell = 0;
  Coord coord{};

  friend bool operator==(const QueenRecord&, const QueenRecord&) = default;
};

using SpiralQueen = QueenRecord<SpiralCoord>;
using QuadQueen = QueenRecord<QuadCoord>;

/// The first num_queens queens on the spiral board.
[[nodiscard]] std::vector<SpiralQueen> simulate_spiral(std::size_t num_queens);

/// All spiral queens on cells < cell_limit.
[[nodiscard]] std::vector<SpiralQueen> simulate_spiral_below(std::uint64_t cell_limit);

/// The first num_queens queens on the quadrant board, antidiagonal order.
[[nodiscard]] std::vector<QuadQueen> simulate_quadrant(std::size_t num_queens);

/// All quadrant queens on cells < cell_limit.
[[nodiscard]] std::vector<QuadQueen> simulate_quadrant_below(std::uint64_t cell_limit);

/// S_c for c < num_columns, read off the antidiagonal scan (scans until
/// every one of those columns holds a queen).
[[nodiscard]] std::vector<std::uint64_t> quadrant_rows_by_antidiagonals(std::size_t num_columns);

/// S_c for c < num_columns, placing one queen per column at the least
/// unattacked row. Near-linear: rows, diagonals and antidiagonals each keep a
/// next-free structure, so a column jumps over occupied runs.
[[nodiscard]] std::vector<std::uint64_t> simulate_quadrant_by_columns(std::size_t num_columns);

enum class SlopeBranch { upper, lower, diagonal };

struct SlopeViolation {
  std::uint64_t column = 0;
  std::uint64_t row = 0;
  SlopeBranch branch = SlopeBranch::diagonal;
  double residual = 0.0;
};

struct BranchExtrema {
  std::size_t count = 0;
  double min_residual = 0.0;
  std::uint64_t argmin = 0;
  double max_residual = 0.0;
  std::uint64_t argmax = 0;
};

/// Open intervals for S - C*phi (upper branch, S_c > c) and
/// S - C/phi (lower branch, S_c < c), plus |residual| thresholds, where
/// C = c + index_base and S = S_c + index_base. The intervals hold with
/// 1-based coordinates; with 0-based ones the upper bound already fails at c = 8.
struct SlopeBounds {
  int index_base = 1;
  double upper_lo = -2.0;
  double upper_hi = 1.0;
  double lower_lo = -3.0;
  double lower_hi = 5.0;
  double epsilon1 = 2.0;
  double epsilon2 = 5.0;
};

struct SlopeReport {
  BranchExtrema upper;
  BranchExtrema lower;
  std::size_t diagonal_count = 0;  // columns with S_c == c (only c = 0)
  std::vector<SlopeViolation> violations;  // outside the open intervals
  std::size_t epsilon_exceedances = 0;     // |residual| >= epsilon on its branch

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

[[nodiscard]] SlopeBranch classify_branch(std::uint64_t column, std::uint64_t row) noexcept;

[[nodiscard]] SlopeReport check_slope_bounds(const std::vector<std::uint64_t>& rows,
                                             const SlopeBounds& bounds = {});

}  // namespace tribq
