#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "tribq/greedy.hpp"
#include "tribq/reference.hpp"
#include "tribq/xymp.hpp"

using namespace tribq;

TEST_CASE("spiral queens against the literal scan") {
  const auto walk = oracle::spiral_walk(40000);
  const auto expect = oracle::greedy_by_scan(walk);
  const auto got = simulate_spiral_below(walk.size());
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].cell == expect[i]);
    CHECK(got[i].ordinal == i);
  }
  const auto first = simulate_spiral(reference::kSpiralQueenCells.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].cell == reference::kSpiralQueenCells[i]);
  }
  CHECK(first[5].coord == SpiralCoord{3, 5});
}

TEST_CASE("spiral queens follow the XYMP table") {
  const auto q = simulate_spiral(801);
  const XympTable t = XympTable::build_mex(201);
  for (std::uint64_t k = 1; k <= 200; ++k) {
    const auto x = static_cast<std::int64_t>(t[k].x);
    const auto y = static_cast<std::int64_t>(t[k].y);
    CHECK(q[4 * k - 3].coord == SpiralCoord{x, y});
    CHECK(q[4 * k - 2].coord == SpiralCoord{-y, x});
    CHECK(q[4 * k - 1].coord == SpiralCoord{-x, -y});
    CHECK(q[4 * k].coord == SpiralCoord{y, -x});
  }
}

TEST_CASE("quadrant queens against the literal scan") {
  const auto walk = oracle::antidiagonal_walk(400);
  const auto expect = oracle::greedy_by_scan(walk);
  const auto got = simulate_quadrant_below(walk.size());
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].cell == expect[i]);
  }
  const auto six = simulate_quadrant(6);
  for (std::size_t i = 0; i < six.size(); ++i) {
    CHECK(six[i].cell == reference::kQuadrantQueenCells[i]);
  }
}

TEST_CASE("column scan equals antidiagonal scan") {
  const auto a = quadrant_rows_by_antidiagonals(5000);
  const auto b = simulate_quadrant_by_columns(5000);
  CHECK(a == b);
  CHECK(std::equal(reference::kQueenRows.begin(), reference::kQueenRows.end(), b.begin()));
  CHECK(b[5] == 8);
  CHECK(std::set<std::uint64_t>(b.begin(), b.end()).size() == b.size());
}

TEST_CASE("slope bounds") {
  CHECK(classify_branch(3, 1) == SlopeBranch::lower);
  CHECK(classify_branch(1, 2) == SlopeBranch::upper);
  CHECK(classify_branch(0, 0) == SlopeBranch::diagonal);
  const auto rows = simulate_quadrant_by_columns(10000);
  const SlopeReport one_based = check_slope_bounds(rows);
  CHECK(one_based.ok());
  CHECK(one_based.diagonal_count == 1);
  SlopeBounds zero;
  zero.index_base = 0;
  const SlopeReport zero_based = check_slope_bounds(rows, zero);
  REQUIRE_FALSE(zero_based.ok());
  CHECK(zero_based.violations.front().column == 8);
}

TEST_CASE("line occupancy") {
  LineOccupancy lines;
  lines.place(0, 0);
  CHECK(lines.attacked(0, 5));
  CHECK(lines.attacked(5, 0));
  CHECK(lines.attacked(-3, -3));
  CHECK(lines.attacked(3, -3));
  CHECK_FALSE(lines.attacked(1, 2));
}
