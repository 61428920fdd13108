#include "tribq/greedy.hpp"

#include <cmath>
#include <numbers>

namespace tribq {
namespace {

// Visits spiral cells in order, edge by edge, calling on_queen for every
// placement until it returns false. Edges whose fixed line is already taken
// are skipped whole.
template <class OnQueen>
void scan_spiral(OnQueen&& on_queen) {
  LineOccupancy occ;
  std::uint64_t ordinal = 0;
  if (!on_queen(SpiralQueen{ordinal++, 0, {0, 0}})) {
    return;
  }
  occ.place(0, 0);
  for (std::int64_t k = 1;; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t first = (2 * uk - 1) * (2 * uk - 1);
    const std::uint64_t edge_len = 2 * uk;
    // Each edge: fixed coordinate, start of the varying one and its step.
    struct EdgeWalk {
      bool fixed_is_x;
      std::int64_t fixed;
      std::int64_t start;
      std::int64_t step;
    };
    const EdgeWalk edges[4] = {
        {false, k, k - 1, -1},   // right: y = k, x descending
        {true, -k, k - 1, -1},   // top: x = -k, y descending
        {false, -k, -k + 1, 1},  // left: y = -k, x ascending
        {true, k, -k + 1, 1},    // bottom: x = k, y ascending
    };
    for (int e = 0; e < 4; ++e) {
      const EdgeWalk& w = edges[e];
      const std::uint64_t base = first + static_cast<std::uint64_t>(e) * edge_len;
      const bool line_taken = w.fixed_is_x ? occ.row_taken(w.fixed) : occ.column_taken(w.fixed);
      if (line_taken) {
        continue;
      }
      for (std::uint64_t t = 0; t < edge_len; ++t) {
        const std::int64_t v = w.start + w.step * static_cast<std::int64_t>(t);
        const std::int64_t x = w.fixed_is_x ? w.fixed : v;
        const std::int64_t y = w.fixed_is_x ? v : w.fixed;
        if (occ.attacked(x, y)) {
          continue;
        }
        if (!on_queen(SpiralQueen{ordinal++, base + t, {x, y}})) {
          return;
        }
        occ.place(x, y);
        // The fixed line is now taken; nothing further on this edge is free.
        break;
      }
    }
  }
}

template <class OnQueen>
void scan_quadrant(OnQueen&& on_queen) {
  LineOccupancy occ;
  std::uint64_t ordinal = 0;
  for (std::uint64_t s = 0;; ++s) {
    const auto ss = static_cast<std::int64_t>(s);
    if (occ.antidiagonal_taken(ss)) {
      continue;
    }
    for (std::uint64_t c = 0; c <= s; ++c) {
      const auto r = static_cast<std::int64_t>(s - c);
      const auto cc = static_cast<std::int64_t>(c);
      if (occ.attacked(r, cc)) {
        continue;
      }
      const QuadQueen q{ordinal++, quad_index({s - c, c}), {s - c, c}};
      if (!on_queen(q)) {
        return;
      }
      occ.place(r, cc);
      break;  // antidiagonal s is now taken
    }
  }
}

}  // namespace

std::vector<SpiralQueen> simulate_spiral(std::size_t num_queens) {
  std::vector<SpiralQueen> out;
  if (num_queens == 0) {
    return out;
  }
  out.reserve(num_queens);
  scan_spiral([&](const SpiralQueen& q) {
    out.push_back(q);
    return out.size() < num_queens;
  });
  return out;
}

std::vector<SpiralQueen> simulate_spiral_below(std::uint64_t cell_limit) {
  std::vector<SpiralQueen> out;
  if (cell_limit == 0) {
    return out;
  }
  scan_spiral([&](const SpiralQueen& q) {
    if (q.cell >= cell_limit) {
      return false;
    }
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<QuadQueen> simulate_quadrant(std::size_t num_queens) {
  std::vector<QuadQueen> out;
  if (num_queens == 0) {
    return out;
  }
  out.reserve(num_queens);
  scan_quadrant([&](const QuadQueen& q) {
    out.push_back(q);
    return out.size() < num_queens;
  });
  return out;
}

std::vector<QuadQueen> simulate_quadrant_below(std::uint64_t cell_limit) {
  std::vector<QuadQueen> out;
  if (cell_limit == 0) {
    return out;
  }
  scan_quadrant([&](const QuadQueen& q) {
    if (q.cell >= cell_limit) {
      return false;
    }
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> quadrant_rows_by_antidiagonals(std::size_t num_columns) {
  constexpr auto kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> rows(num_columns, kUnset);
  std::size_t filled = 0;
  if (num_columns == 0) {
    return rows;
  }
  scan_quadrant([&](const QuadQueen& q) {
    if (q.coord.c < num_columns) {
      rows[q.coord.c] = q.coord.r;
      ++filled;
    }
    return filled < num_columns;
  });
  return rows;
}

std::vector<std::uint64_t> simulate_quadrant_by_columns(std::size_t num_columns) {
  std::vector<std::uint64_t> rows;
  rows.reserve(num_columns);
  NextFree free_rows(0);
  NextFree free_diags(-static_cast<std::int64_t>(num_columns));  // key r - c
  NextFree free_antidiags(0);                                    // key r + c
  for (std::size_t ci = 0; ci < num_columns; ++ci) {
    const auto c = static_cast<std::int64_t>(ci);
    std::int64_t r = 0;
    for (;;) {
      const std::int64_t r1 = free_rows.next(r);
      const std::int64_t r2 = free_diags.next(r1 - c) + c;
      const std::int64_t r3 = free_antidiags.next(r2 + c) - c;
      if (r3 == r) {
        break;
      }
      r = r3;
    }
    free_rows.mark(r);
    free_diags.mark(r - c);
    free_antidiags.mark(r + c);
    rows.push_back(static_cast<std::uint64_t>(r));
  }
  return rows;
}

SlopeBranch classify_branch(std::uint64_t column, std::uint64_t row) noexcept {
  if (row > column) {
    return SlopeBranch::upper;
  }
  if (row < column) {
    return SlopeBranch::lower;
  }
  return SlopeBranch::diagonal;
}

SlopeReport check_slope_bounds(const std::vector<std::uint64_t>& rows, const SlopeBounds& bounds) {
  constexpr long double phi = std::numbers::phi_v<long double>;
  SlopeReport report;
  auto track = [](BranchExtrema& e, double residual, std::uint64_t c) {
    if (e.count == 0 || residual < e.min_residual) {
      e.min_residual = residual;
      e.argmin = c;
    }
    if (e.count == 0 || residual > e.max_residual) {
      e.max_residual = residual;
      e.argmax = c;
    }
    ++e.count;
  };
  for (std::uint64_t c = 0; c < rows.size(); ++c) {
    const std::uint64_t s = rows[c];
    const SlopeBranch branch = classify_branch(c, s);
    const auto cl = static_cast<long double>(c) + bounds.index_base;
    const auto sl = static_cast<long double>(s) + bounds.index_base;
    switch (branch) {
      case SlopeBranch::upper: {
        const auto res = static_cast<double>(sl - cl * phi);
        track(report.upper, res, c);
        if (!(res > bounds.upper_lo && res < bounds.upper_hi)) {
          report.violations.push_back({c, s, branch, res});
        }
        if (std::fabs(res) >= bounds.epsilon1) {
          ++report.epsilon_exceedances;
        }
        break;
      }
      case SlopeBranch::lower: {
        const auto res = static_cast<double>(sl - cl / phi);
        track(report.lower, res, c);
        if (!(res > bounds.lower_lo && res < bounds.lower_hi)) {
          report.violations.push_back({c, s, branch, res});
        }
        if (std::fabs(res) >= bounds.epsilon2) {
          ++report.epsilon_exceedances;
        }
        break;
      }
      case SlopeBranch::diagonal:
        ++report.diagonal_count;
        break;
    }
  }
  return report;
}

}  // namespace tribq
