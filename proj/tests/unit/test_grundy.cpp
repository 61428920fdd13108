#include <doctest.h>

#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "tribq/greedy.hpp"
#include "tribq/grundy.hpp"
#include "tribq/reference.hpp"

using namespace tribq;

TEST_CASE("mex") {
  CHECK(mex(std::vector<std::uint64_t>{}) == 0);
  CHECK(mex(std::vector<std::uint64_t>{1, 2}) == 0);
  CHECK(mex(std::vector<std::uint64_t>{0, 0, 1, 3}) == 2);
}

TEST_CASE("spiral table against the literal scan") {
  const auto walk = oracle::spiral_walk(2000);
  const auto expect = oracle::sg_by_scan(walk, oracle::queen_line);
  const SGTable t = sg_spiral(walk.size());
  REQUIRE(t.size() == expect.size());
  for (std::size_t n = 0; n < expect.size(); ++n) {
    REQUIRE(t.at_cell(n) == expect[n]);
  }
}

TEST_CASE("quadrant table against the literal scan") {
  const auto walk = oracle::antidiagonal_walk(60);
  const auto expect = oracle::sg_by_scan(walk, oracle::queen_line);
  const SGTable t = sg_quadrant(60);
  REQUIRE(t.size() == expect.size());
  for (std::size_t n = 0; n < expect.size(); ++n) {
    REQUIRE(t.at_cell(n) == expect[n]);
  }
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; r + c < 9; ++c) {
      CHECK(static_cast<int>(t.at(r, c)) == reference::kQuadrantCorner[r][c]);
    }
  }
  CHECK_FALSE(t.contains(30, 30));
  CHECK_THROWS_AS((void)t.at(30, 30), std::out_of_range);
}

TEST_CASE("wythoff table against the literal recurrence") {
  const auto expect = oracle::sg_wythoff(40, 30);
  const SGTable t = sg_wythoff(40, 30);
  CHECK(t.values() == expect);
  CHECK(sg_wythoff(1, 1).values() == std::vector<SGValue>{0});
  const auto w = wythoff_zero_rows(22);
  CHECK(std::equal(w.begin(), w.end(), reference::kWythoffRows.begin()));
}

TEST_CASE("zeros are the greedy queens") {
  const SGTable s = sg_spiral(20000);
  std::vector<std::uint64_t> queens;
  for (const auto& q : simulate_spiral_below(20000)) {
    queens.push_back(q.cell);
  }
  CHECK(s.zero_cells() == queens);
  const SGTable q = sg_quadrant(300);
  queens.clear();
  for (const auto& r : simulate_quadrant_below(cells_in_antidiagonals(300))) {
    queens.push_back(r.cell);
  }
  CHECK(q.zero_cells() == queens);
}

TEST_CASE("column-limited build equals the full table") {
  const SGTable full = sg_quadrant(400);
  const QuadrantColumns cols = sg_quadrant_columns(12, 300);
  for (std::size_t c = 0; c < 12; ++c) {
    for (std::uint64_t r = 0; r < 300; ++r) {
      REQUIRE(cols.columns[c][r] == full.at(r, c));
    }
  }
  for (std::uint64_t r = 0; r < 300; ++r) {
    CHECK(cols.columns[1][r] == (r ^ 2U));
  }
}

TEST_CASE("line analysis") {
  const SGTable q = sg_quadrant(50);
  const auto row0 = line_values(q, {LineKind::row, 0});
  CHECK(row0.size() == 50);
  CHECK(row0[3] == 5);
  const CoverageReport r = line_permutation_report(std::vector<SGValue>{0, 2, 1, 4}, 3);
  CHECK(r.coverage == 2);
  CHECK_FALSE(r.covers_horizon);
  CHECK(line_permutation_report(std::vector<SGValue>{1, 1}, 0).duplicates == 1);
  CHECK(line_permutation_report(std::vector<SGValue>{1, 1}, 0).coverage == -1);
  CHECK(duplicate_scan(q).ok());
  CHECK(duplicate_scan(sg_spiral(5000)).ok());
  CHECK(duplicate_scan(sg_wythoff(30, 30)).ok());
  const SGTable bad(BoardKind::quadrant, {0, 0, 0}, 2, 0);
  CHECK_FALSE(duplicate_scan(bad).ok());
}

TEST_CASE("quasi-period detection") {
  std::vector<SGValue> ramp(200);
  for (std::size_t i = 0; i < ramp.size(); ++i) {
    ramp[i] = static_cast<SGValue>(i);
  }
  const QuasiPeriodReport r = column_quasiperiod(ramp, 16);
  CHECK(r.settled);
  CHECK(r.preperiod == 0);
  const QuadrantColumns cols = sg_quadrant_columns(3, 2000);
  const QuasiPeriodReport two = column_quasiperiod(cols.columns[2], 16);
  REQUIRE(two.settled);
  CHECK(std::equal(two.numerator.begin(), two.numerator.end(), reference::kColumnTwoNumerator.begin(),
                   reference::kColumnTwoNumerator.end()));
  CHECK(least_settling_period(cols.columns[1], 64) == 4);
}

TEST_CASE("property: bit structures agree with std::set") {
  gen::Source src(41);
  for (int i = 0; i < 100; ++i) {
    MexSet mex_set;
    ValueSet value_set;
    SignedBitset bits;
    NextFree next_free(-50);
    std::set<std::int64_t> ref;
    for (int k = 0; k < 200; ++k) {
      const std::int64_t v = src.between(-50, 300);
      if (v >= 0) {
        mex_set.insert(static_cast<std::uint64_t>(v));
        value_set.insert(static_cast<SGValue>(v));
      }
      bits.set(v);
      next_free.mark(v);
      ref.insert(v);
      std::uint64_t m = 0;
      while (ref.count(static_cast<std::int64_t>(m)) != 0) {
        ++m;
      }
      REQUIRE(mex_set.mex() == m);
      const std::int64_t probe = src.between(-50, 320);
      REQUIRE(bits.test(probe) == (ref.count(probe) != 0));
      REQUIRE(value_set.contains(static_cast<SGValue>(probe < 0 ? 0 : probe)) ==
              (ref.count(probe < 0 ? 0 : probe) != 0));
      std::int64_t expect = probe;
      while (ref.count(expect) != 0) {
        ++expect;
      }
      REQUIRE(next_free.next(probe) == expect);
    }
  }
}

TEST_CASE("property: LineValueIndex mex equals the mex of the union") {
  gen::Source src(42);
  for (int i = 0; i < gen::kCases; ++i) {
    LineValueIndex index(2, -5, 5);
    std::set<SGValue> all;
    std::vector<const ValueSet*> lines;
    for (std::size_t f = 0; f < 2; ++f) {
      const std::int64_t key = src.between(-5, 5);
      for (std::uint64_t v : src.values(60, 150)) {
        index.line(f, key).insert(static_cast<SGValue>(v));
      }
      lines.push_back(&index.line(f, key));
    }
    for (const ValueSet* l : lines) {
      for (SGValue v = 0; v < 200; ++v) {
        if (l->contains(v)) {
          all.insert(v);
        }
      }
    }
    SGValue m = 0;
    while (all.count(m) != 0) {
      ++m;
    }
    CHECK(LineValueIndex::mex_of(lines) == m);
  }
}
