#include "tribq/grundy.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <new>

namespace tribq {
namespace {

constexpr std::uint64_t kMaxValue = std::numeric_limits<SGValue>::max() - 1;

std::uint64_t physical_memory_bytes() {
  const long pages = ::sysconf(_SC_PHYS_PAGES);
  const long page = ::sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page <= 0) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page);
}

// Rejects builds whose value array alone cannot fit in physical memory.
void check_budget(std::uint64_t cells, std::uint64_t bytes_per_cell, const char* what) {
  const std::uint64_t limit = physical_memory_bytes();
  if (cells > limit / bytes_per_cell) {
    throw ResourceError(std::string(what) + ": " + std::to_string(cells) +
                            " cells exceed physical memory",
                        0);
  }
}

SGValue checked_value(std::uint64_t v) {
  if (v > kMaxValue) {
    throw std::overflow_error("SG value exceeds 32-bit storage");
  }
  return static_cast<SGValue>(v);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

// Largest k with cells_through_shell(k) <= n, or 0 when not even shell 0 is done.
std::uint64_t complete_shells(std::uint64_t n) {
  if (n == 0) {
    return 0;
  }
  return (isqrt(n) - 1) / 2 + 1;
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t mex(std::span<const std::uint64_t> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (std::uint64_t v : values) {
    if (v < seen.size()) {
      seen[v] = true;
    }
  }
  std::uint64_t m = 0;
  while (seen[m]) {
    ++m;
  }
  return m;
}

// ---------------------------------------------------------------- index

LineValueIndex::LineValueIndex(std::size_t families, std::int64_t min_key, std::int64_t max_key)
    : min_key_(min_key),
      width_(static_cast<std::size_t>(max_key - min_key + 1)),
      sets_(families * width_) {}

ValueSet& LineValueIndex::line(std::size_t family, std::int64_t key) {
  return sets_[family * width_ + static_cast<std::size_t>(key - min_key_)];
}

SGValue LineValueIndex::mex_of(std::span<const ValueSet* const> lines) {
  std::size_t words = 0;
  for (const ValueSet* s : lines) {
    words = std::max(words, s->num_words());
  }
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t present = 0;
    for (const ValueSet* s : lines) {
      present |= s->word(w);
    }
    if (present != ~std::uint64_t{0}) {
      return checked_value(w * 64 + static_cast<std::uint64_t>(std::countr_one(present)));
    }
  }
  return checked_value(words * 64);
}

// ---------------------------------------------------------------- table

SGTable::SGTable(BoardKind kind, std::vector<SGValue> values, std::uint64_t rows,
                 std::uint64_t cols)
    : kind_(kind), values_(std::move(values)), rows_(rows), cols_(cols) {}

bool SGTable::contains(std::uint64_t r, std::uint64_t c) const noexcept {
  switch (kind_) {
    case BoardKind::quadrant:
      return r + c < rows_;
    case BoardKind::wythoff:
      return r < rows_ && c < cols_;
    case BoardKind::spiral:
      break;
  }
  return false;
}

SGValue SGTable::at(std::uint64_t r, std::uint64_t c) const {
  if (!contains(r, c)) {
    throw std::out_of_range("SGTable::at: cell outside the computed extent");
  }
  if (kind_ == BoardKind::wythoff) {
    return values_[r * cols_ + c];
  }
  return values_[quad_index({r, c})];
}

SGValue SGTable::at(SpiralCoord p) const {
  if (kind_ != BoardKind::spiral) {
    throw std::logic_error("SGTable::at: not a spiral table");
  }
  return values_.at(xy_to_spiral(p));
}

std::vector<std::uint64_t> SGTable::zero_cells() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < values_.size(); ++n) {
    if (values_[n] == 0) {
      out.push_back(n);
    }
  }
  return out;
}

// ---------------------------------------------------------------- builders

SGTable sg_spiral(std::uint64_t num_cells) {
  if (num_cells == 0) {
    return SGTable(BoardKind::spiral, {}, 0, 0);
  }
  check_budget(num_cells, sizeof(SGValue) * 2, "sg_spiral");
  std::uint64_t n = 0;
  try {
    const auto k = as_signed(shell_of(num_cells - 1));
    LineValueIndex index(4, -2 * k, 2 * k);
    std::vector<SGValue> values;
    values.reserve(num_cells);
    for (; n < num_cells; ++n) {
      const SpiralCoord p = spiral_to_xy(n);
      ValueSet* lines[4] = {&index.line(0, p.x), &index.line(1, p.y), &index.line(2, p.y - p.x),
                            &index.line(3, p.y + p.x)};
      const SGValue v = LineValueIndex::mex_of(lines);
      for (ValueSet* s : lines) {
        s->insert(v);
      }
      values.push_back(v);
    }
    return SGTable(BoardKind::spiral, std::move(values), 0, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("sg_spiral: out of memory", complete_shells(n));
  }
}

SGTable sg_quadrant(std::uint64_t num_antidiagonals) {
  const std::uint64_t d = num_antidiagonals;
  if (d == 0) {
    return SGTable(BoardKind::quadrant, {}, 0, 0);
  }
  check_budget(cells_in_antidiagonals(d), sizeof(SGValue) * 2, "sg_quadrant");
  std::uint64_t s = 0;
  try {
    LineValueIndex index(4, -as_signed(d - 1), as_signed(d - 1));
    std::vector<SGValue> values;
    values.reserve(cells_in_antidiagonals(d));
    for (; s < d; ++s) {
      for (std::uint64_t c = 0; c <= s; ++c) {
        const auto r = as_signed(s - c);
        const auto cc = as_signed(c);
        ValueSet* lines[4] = {&index.line(0, r), &index.line(1, cc), &index.line(2, cc - r),
                              &index.line(3, r + cc)};
        const SGValue v = LineValueIndex::mex_of(lines);
        for (ValueSet* l : lines) {
          l->insert(v);
        }
        values.push_back(v);
      }
    }
    return SGTable(BoardKind::quadrant, std::move(values), d, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("sg_quadrant: out of memory", s);
  }
}

SGTable sg_wythoff(std::uint64_t rows, std::uint64_t cols) {
  if (rows == 0 || cols == 0) {
    return SGTable(BoardKind::wythoff, {}, rows, cols);
  }
  if (rows > std::numeric_limits<std::uint64_t>::max() / cols) {
    throw ResourceError("sg_wythoff: extent overflows", 0);
  }
  check_budget(rows * cols, sizeof(SGValue) * 2, "sg_wythoff");
  std::uint64_t r = 0;
  try {
    LineValueIndex index(3, -as_signed(rows - 1), as_signed(std::max(rows, cols) - 1));
    std::vector<SGValue> values;
    values.reserve(rows * cols);
    for (; r < rows; ++r) {
      for (std::uint64_t c = 0; c < cols; ++c) {
        const auto rr = as_signed(r);
        const auto cc = as_signed(c);
        ValueSet* lines[3] = {&index.line(0, rr), &index.line(1, cc), &index.line(2, cc - rr)};
        const SGValue v = LineValueIndex::mex_of(lines);
        for (ValueSet* l : lines) {
          l->insert(v);
        }
        values.push_back(v);
      }
    }
    return SGTable(BoardKind::wythoff, std::move(values), rows, cols);
  } catch (const std::bad_alloc&) {
    throw ResourceError("sg_wythoff: out of memory", r);
  }
}

QuadrantColumns sg_quadrant_columns(std::size_t num_columns, std::uint64_t depth) {
  QuadrantColumns out;
  out.depth = depth;
  if (num_columns == 0 || depth == 0) {
    out.columns.resize(num_columns);
    return out;
  }
  const std::uint64_t last_antidiagonal = depth - 1 + num_columns - 1;
  check_budget((last_antidiagonal + 1) * num_columns, sizeof(SGValue) + 1, "sg_quadrant_columns");
  std::uint64_t s = 0;
  try {
    auto& cols = out.columns;
    cols.resize(num_columns);
    for (std::size_t c = 0; c < num_columns; ++c) {
      cols[c].reserve(last_antidiagonal - c + 1);
    }
    std::vector<ValueSet> seen(num_columns);  // values already in each column
    std::vector<std::uint64_t> low(num_columns, 0);  // all values < low[c] are in column c
    std::vector<SGValue> extra;
    extra.reserve(3 * num_columns);

    for (; s <= last_antidiagonal; ++s) {
      const std::size_t top = static_cast<std::size_t>(std::min<std::uint64_t>(s, num_columns - 1));
      for (std::size_t c = 0; c <= top; ++c) {
        const std::uint64_t r = s - c;
        extra.clear();
        for (std::size_t d = 1; d <= c; ++d) {
          extra.push_back(cols[c - d][r]);          // same row
          extra.push_back(cols[c - d][r + d]);      // down-left on the antidiagonal
          if (d <= r) {
            extra.push_back(cols[c - d][r - d]);    // diagonal
          }
        }
        std::sort(extra.begin(), extra.end());
        const ValueSet& col = seen[c];
        auto next_absent = [&col](std::uint64_t v) {
          while (col.contains(static_cast<SGValue>(v))) {
            ++v;
          }
          return v;
        };
        std::uint64_t v = next_absent(low[c]);
        for (SGValue e : extra) {
          if (e == v) {
            v = next_absent(v + 1);
          } else if (e > v) {
            break;
          }
        }
        const SGValue value = checked_value(v);
        cols[c].push_back(value);
        seen[c].insert(value);
        while (seen[c].contains(static_cast<SGValue>(low[c]))) {
          ++low[c];
        }
      }
    }
    for (auto& column : cols) {
      column.resize(depth);
      column.shrink_to_fit();
    }
    return out;
  } catch (const std::bad_alloc&) {
    throw ResourceError("sg_quadrant_columns: out of memory", s);
  }
}

std::vector<std::uint64_t> wythoff_zero_rows(std::size_t num_columns) {
  std::vector<std::uint64_t> rows;
  rows.reserve(num_columns);
  NextFree free_rows(0);
  NextFree free_diags(-as_signed(num_columns));  // key r - c
  for (std::size_t ci = 0; ci < num_columns; ++ci) {
    const auto c = as_signed(ci);
    std::int64_t r = 0;
    for (;;) {
      const std::int64_t r1 = free_rows.next(r);
      const std::int64_t r2 = free_diags.next(r1 - c) + c;
      if (r2 == r) {
        break;
      }
      r = r2;
    }
    free_rows.mark(r);
    free_diags.mark(r - c);
    rows.push_back(static_cast<std::uint64_t>(r));
  }
  return rows;
}

// ---------------------------------------------------------------- lines

namespace {

std::vector<std::uint64_t> spiral_line_cells(std::uint64_t num_cells, LineSpec line) {
  std::vector<std::uint64_t> cells;
  if (num_cells == 0) {
    return cells;
  }
  const auto k = as_signed(shell_of(num_cells - 1));
  for (std::int64_t t = -k; t <= k; ++t) {
    SpiralCoord p;
    switch (line.kind) {
      case LineKind::row:
        p = {line.key, t};
        break;
      case LineKind::column:
        p = {t, line.key};
        break;
      case LineKind::diagonal:
        p = {t, t + line.key};
        break;
      case LineKind::antidiagonal:
        p = {t, line.key - t};
        break;
    }
    if (p.y < -k || p.y > k) {
      continue;
    }
    const std::uint64_t n = xy_to_spiral(p);
    if (n < num_cells) {
      cells.push_back(n);
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// (r, c) cells of a quadrant or wythoff line inside the extent, by increasing row.
std::vector<QuadCoord> grid_line_cells(const SGTable& t, LineSpec line) {
  std::vector<QuadCoord> cells;
  const std::uint64_t bound = t.kind() == BoardKind::quadrant ? t.rows() : t.rows() + t.cols();
  auto push = [&](std::int64_t r, std::int64_t c) {
    if (r >= 0 && c >= 0 && t.contains(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c))) {
      cells.push_back({static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)});
    }
  };
  const auto b = as_signed(bound);
  switch (line.kind) {
    case LineKind::row:
      for (std::int64_t c = 0; c < b; ++c) {
        push(line.key, c);
      }
      break;
    case LineKind::column:
      for (std::int64_t r = 0; r < b; ++r) {
        push(r, line.key);
      }
      break;
    case LineKind::diagonal:
      for (std::int64_t r = std::max<std::int64_t>(0, -line.key); r < b; ++r) {
        push(r, r + line.key);
      }
      break;
    case LineKind::antidiagonal:
      for (std::int64_t r = line.key; r >= 0; --r) {
        push(r, line.key - r);
      }
      break;
  }
  return cells;
}

}  // namespace

std::vector<SGValue> line_values(const SGTable& table, LineSpec line) {
  std::vector<SGValue> out;
  if (table.kind() == BoardKind::spiral) {
    for (std::uint64_t n : spiral_line_cells(table.size(), line)) {
      out.push_back(table.at_cell(n));
    }
    return out;
  }
  for (const QuadCoord& p : grid_line_cells(table, line)) {
    out.push_back(table.at(p.r, p.c));
  }
  return out;
}

CoverageReport line_permutation_report(std::span<const SGValue> values, std::uint64_t horizon) {
  CoverageReport rep;
  rep.length = values.size();
  std::vector<SGValue> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      ++rep.duplicates;
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::int64_t w = -1;
  for (SGValue v : sorted) {
    if (as_signed(v) != w + 1) {
      break;
    }
    w = v;
  }
  rep.coverage = w;
  rep.covers_horizon = w >= 0 && static_cast<std::uint64_t>(w) >= horizon;
  return rep;
}

CoverageReport line_permutation_report(const SGTable& table, LineSpec line,
                                       std::uint64_t horizon) {
  const std::vector<SGValue> values = line_values(table, line);
  return line_permutation_report(values, horizon);
}

DuplicateReport duplicate_scan(const SGTable& table) {
  DuplicateReport rep;
  const std::size_t n = table.size();
  const std::size_t families = table.kind() == BoardKind::wythoff ? 3 : 4;
  constexpr std::int64_t kBias = std::int64_t{1} << 31;
  std::vector<std::uint64_t> packed(n);
  for (std::size_t f = 0; f < families; ++f) {
    const auto kind = static_cast<LineKind>(f);
    for (std::uint64_t cell = 0; cell < n; ++cell) {
      std::int64_t a = 0;  // row / x
      std::int64_t b = 0;  // column / y
      if (table.kind() == BoardKind::spiral) {
        const SpiralCoord p = spiral_to_xy(cell);
        a = p.x;
        b = p.y;
      } else if (table.kind() == BoardKind::quadrant) {
        const QuadCoord p = quad_coord(cell);
        a = as_signed(p.r);
        b = as_signed(p.c);
      } else {
        a = as_signed(cell / table.cols());
        b = as_signed(cell % table.cols());
      }
      std::int64_t key = 0;
      switch (kind) {
        case LineKind::row:
          key = a;
          break;
        case LineKind::column:
          key = b;
          break;
        case LineKind::diagonal:
          key = b - a;
          break;
        case LineKind::antidiagonal:
          key = b + a;
          break;
      }
      packed[cell] = (static_cast<std::uint64_t>(key + kBias) << 32) | table.at_cell(cell);
    }
    std::sort(packed.begin(), packed.end());
    for (std::size_t i = 0; i < packed.size(); ++i) {
      if (i == 0 || (packed[i] >> 32) != (packed[i - 1] >> 32)) {
        ++rep.lines_checked;
      } else if (packed[i] == packed[i - 1]) {
        ++rep.duplicate_pairs;
        if (rep.examples.size() < 8) {
          rep.examples.push_back({kind, static_cast<std::int64_t>(packed[i] >> 32) - kBias,
                                  static_cast<SGValue>(packed[i] & 0xffffffffU)});
        }
      }
    }
  }
  return rep;
}

QuasiPeriodReport column_quasiperiod(std::span<const SGValue> column, std::size_t period) {
  if (period == 0) {
    throw std::invalid_argument("column_quasiperiod: period must be positive");
  }
  QuasiPeriodReport rep;
  const std::size_t n = column.size();
  rep.depth = n;
  auto s = [&](std::int64_t i) -> std::int64_t { return i < 0 ? 0 : column[static_cast<std::size_t>(i)]; };
  const auto p = as_signed(period);
  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = as_signed(i);
    d[i] = s(k) - s(k - 1) - s(k - p) + s(k - p - 1);
    if (d[i] != 0) {
      rep.last_violation = k;
    }
  }
  rep.numerator.assign(d.begin(), d.begin() + (rep.last_violation + 1));
  rep.preperiod = static_cast<std::size_t>(std::max<std::int64_t>(0, rep.last_violation - p));
  const std::size_t tail = n - static_cast<std::size_t>(rep.last_violation + 1);
  rep.settled = tail >= std::max(4 * period, n / 2);
  return rep;
}

std::size_t least_settling_period(std::span<const SGValue> column, std::size_t max_period) {
  for (std::size_t p = 1; p <= max_period; p *= 2) {
    if (column_quasiperiod(column, p).settled) {
      return p;
    }
  }
  return 0;
}

std::string board_name(BoardKind kind) {
  switch (kind) {
    case BoardKind::spiral:
      return "spiral";
    case BoardKind::quadrant:
      return "quadrant";
    case BoardKind::wythoff:
      return "wythoff";
  }
  return "?";
}

std::string line_kind_name(LineKind kind) {
  switch (kind) {
    case LineKind::row:
      return "row";
    case LineKind::column:
      return "column";
    case LineKind::diagonal:
      return "diagonal";
    case LineKind::antidiagonal:
      return "antidiagonal";
  }
  return "?";
}

}  // namespace tribq
