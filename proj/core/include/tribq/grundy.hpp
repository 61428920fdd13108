#pragma once

// Sprague-Grundy tables for three queen-like games and the analysis passes
// that run over finished tables.
//
//   spiral    cells of Z x Z in spiral order; a move goes to any lower-numbered
//             cell on the same row, column or diagonal.
//   quadrant  cells of N x N in antidiagonal order; moves (r, c-d), (r-d, c),
//             (r-d, c-d) and the down-left move (r+d, c-d).
//   wythoff   rows x cols rectangle; moves (r-d, c), (r, c-d), (r-d, c-d).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribq/bits.hpp"
#include "tribq/geometry.hpp"

namespace tribq {

using SGValue = std::uint32_t;

/// Smallest nonnegative integer not in values (duplicates allowed).
[[nodiscard]] std::uint64_t mex(std::span<const std::uint64_t> values);

/// A table build ran out of memory (or would exceed physical memory).
/// completed_extent is the largest extent fully built before stopping:
/// shells for the spiral, antidiagonals for the quadrant, rows for wythoff.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t completed_extent)
      : std::runtime_error(what), completed_extent_(completed_extent) {}
  [[nodiscard]] std::uint64_t completed_extent() const noexcept { return completed_extent_; }

 private:
  std::uint64_t completed_extent_;
};

/// Growable presence bitset of SG values seen on one line.
class ValueSet {
 public:
  void insert(SGValue v) {
    const std::size_t w = v >> 6;
    if (w >= words_.size()) {
      words_.resize(w + 1 + words_.size() / 2, 0);
    }
    words_[w] |= std::uint64_t{1} << (v & 63);
  }

  [[nodiscard]] bool contains(SGValue v) const {
    const std::size_t w = v >> 6;
    return w < words_.size() && ((words_[w] >> (v & 63)) & 1U) != 0;
  }

  [[nodiscard]] std::uint64_t word(std::size_t w) const {
    return w < words_.size() ? words_[w] : 0;
  }

  [[nodiscard]] std::size_t num_words() const noexcept { return words_.size(); }

 private:
  std::vector<std::uint64_t> words_;
};

/// One ValueSet per line key, for a fixed number of line families
/// (row, column, diagonal, antidiagonal). Keys may be negative.
class LineValueIndex {
 public:
  LineValueIndex(std::size_t families, std::int64_t min_key, std::int64_t max_key);

  [[nodiscard]] ValueSet& line(std::size_t family, std::int64_t key);

  /// First value absent from the union of the given lines.
  [[nodiscard]] static SGValue mex_of(std::span<const ValueSet* const> lines);

 private:
  std::int64_t min_key_;
  std::size_t width_;
  std::vector<ValueSet> sets_;
};

enum class BoardKind { spiral, quadrant, wythoff };

/// Flat value array. Layout: spiral and quadrant in cell-number order;
/// wythoff row-major over rows x cols.
class SGTable {
 public:
  SGTable() = default;
  SGTable(BoardKind kind, std::vector<SGValue> values, std::uint64_t rows, std::uint64_t cols);

  [[nodiscard]] BoardKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<SGValue>& values() const noexcept { return values_; }
  [[nodiscard]] SGValue at_cell(std::uint64_t n) const { return values_.at(n); }

  /// Quadrant: number of complete antidiagonals. Wythoff: row count.
  [[nodiscard]] std::uint64_t rows() const noexcept { return rows_; }
  /// Wythoff column count (0 for the other boards).
  [[nodiscard]] std::uint64_t cols() const noexcept { return cols_; }

  /// Quadrant or wythoff value at (r, c); throws out_of_range outside the extent.
  [[nodiscard]] SGValue at(std::uint64_t r, std::uint64_t c) const;
  [[nodiscard]] bool contains(std::uint64_t r, std::uint64_t c) const noexcept;

  /// Spiral value at a coordinate; throws out_of_range outside the prefix.
  [[nodiscard]] SGValue at(SpiralCoord p) const;

  /// Cells with value 0, as cell numbers (wythoff: r * cols + c).
  [[nodiscard]] std::vector<std::uint64_t> zero_cells() const;

 private:
  BoardKind kind_ = BoardKind::spiral;
  std::vector<SGValue> values_;
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
};

[[nodiscard]] SGTable sg_spiral(std::uint64_t num_cells);
[[nodiscard]] SGTable sg_quadrant(std::uint64_t num_antidiagonals);
[[nodiscard]] SGTable sg_wythoff(std::uint64_t rows, std::uint64_t cols);

/// Exact values of columns 0 .. num_columns-1 of the quadrant table for rows
/// 0 .. depth-1. A cell only depends on columns <= its own, so the build
/// never touches other columns. columns[c][r] is the value at (r, c).
struct QuadrantColumns {
  std::uint64_t depth = 0;
  std::vector<std::vector<SGValue>> columns;
};

[[nodiscard]] QuadrantColumns sg_quadrant_columns(std::size_t num_columns, std::uint64_t depth);

/// W_c for c < num_columns: the row of the unique zero in column c of the
/// wythoff table, by a greedy column scan over free rows and diagonals.
[[nodiscard]] std::vector<std::uint64_t> wythoff_zero_rows(std::size_t num_columns);

enum class LineKind { row, column, diagonal, antidiagonal };

/// Spiral keys: row x, column y, diagonal y - x, antidiagonal y + x.
/// Quadrant / wythoff keys: row r, column c, diagonal c - r, antidiagonal r + c.
struct LineSpec {
  LineKind kind = LineKind::row;
  std::int64_t key = 0;
};

/// Values along a line inside the computed extent, in cell-number order.
[[nodiscard]] std::vector<SGValue> line_values(const SGTable& table, LineSpec line);

struct CoverageReport {
  std::size_t length = 0;
  std::size_t duplicates = 0;       // values seen more than once
  std::int64_t coverage = -1;       // largest W with 0..W all present; -1 if 0 absent
  bool covers_horizon = false;      // coverage >= horizon
};

/// Never claims a full permutation: only reports duplicates and the
/// longest present prefix 0..W of values on the computed part of the line.
[[nodiscard]] CoverageReport line_permutation_report(std::span<const SGValue> line_values,
                                                     std::uint64_t horizon);
[[nodiscard]] CoverageReport line_permutation_report(const SGTable& table, LineSpec line,
                                                     std::uint64_t horizon);

struct DuplicateReport {
  std::size_t lines_checked = 0;
  std::size_t duplicate_pairs = 0;
  struct Example {
    LineKind kind;
    std::int64_t key;
    SGValue value;
  };
  std::vector<Example> examples;  // first few offenders

  [[nodiscard]] bool ok() const noexcept { return duplicate_pairs == 0; }
};

/// Scans every row, column, diagonal and antidiagonal of the table that the
/// game uses (wythoff has no antidiagonal moves) for repeated values.
/// Independent of the builders: sorts (line, value) pairs.
[[nodiscard]] DuplicateReport duplicate_scan(const SGTable& table);

struct QuasiPeriodReport {
  bool settled = false;
  std::size_t depth = 0;                // number of terms examined
  std::int64_t last_violation = -1;     // last n with nonzero second difference
  std::size_t preperiod = 0;            // K = max(0, last_violation - period)
  std::vector<std::int64_t> numerator;  // coefficients of s(x)(1-x)(1-x^p)
};

/// d_n = s_n - s_{n-1} - s_{n-p} + s_{n-p-1} (terms with negative index are 0)
/// are the coefficients of s(x)(1-x)(1-x^p). The column counts as settled
/// when the all-zero tail is at least max(4p, depth/2) terms long.
[[nodiscard]] QuasiPeriodReport column_quasiperiod(std::span<const SGValue> column,
                                                   std::size_t period = 16);

/// Smallest power-of-two period p <= max_period for which the column
/// settles, or 0 if none does at this depth.
[[nodiscard]] std::size_t least_settling_period(std::span<const SGValue> column,
                                                std::size_t max_period);

[[nodiscard]] std::string board_name(BoardKind kind);
[[nodiscard]] std::string line_kind_name(LineKind kind);

}  // namespace tribq
