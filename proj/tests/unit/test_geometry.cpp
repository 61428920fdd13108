#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "tribq/geometry.hpp"

using namespace tribq;

TEST_CASE("spiral numbering matches the step walk") {
  const auto walk = oracle::spiral_walk(100000);
  for (std::uint64_t n = 0; n < walk.size(); ++n) {
    const SpiralCoord p = spiral_to_xy(n);
    REQUIRE(p == SpiralCoord{walk[n].first, walk[n].second});
    REQUIRE(xy_to_spiral(p) == n);
  }
}

TEST_CASE("shells and edges") {
  CHECK(shell_of(0) == 0);
  CHECK(edge_of(0) == Edge::center);
  CHECK(shell_of(1) == 1);
  CHECK(shell_of(8) == 1);
  CHECK(shell_of(9) == 2);
  CHECK(cells_through_shell(1) == 9);
  CHECK(spiral_to_xy(9) == SpiralCoord{1, 2});  // first queen after the origin
  CHECK(edge_of(9) == Edge::right);
  CHECK(edge_of(13) == Edge::top);
  CHECK(edge_of(17) == Edge::left);
  CHECK(edge_of(21) == Edge::bottom);
}

TEST_CASE("quadrant numbering matches the antidiagonal walk") {
  const auto walk = oracle::antidiagonal_walk(300);
  for (std::uint64_t n = 0; n < walk.size(); ++n) {
    const QuadCoord p{static_cast<std::uint64_t>(walk[n].first), static_cast<std::uint64_t>(walk[n].second)};
    REQUIRE(quad_coord(n) == p);
    REQUIRE(quad_index(p) == n);
  }
  CHECK(cells_in_antidiagonals(4) == 10);
}

TEST_CASE("property: coordinate round trips") {
  gen::Source src(31);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::uint64_t n = src.skewed(60);
    CHECK(xy_to_spiral(spiral_to_xy(n)) == n);
    const std::uint64_t m = src.skewed(60);
    CHECK(quad_index(quad_coord(m)) == m);
    const SpiralCoord p{src.between(-1000000, 1000000), src.between(-1000000, 1000000)};
    CHECK(spiral_to_xy(xy_to_spiral(p)) == p);
    const SpiralCoord q = rotate_quarter(p);
    CHECK(shell_of(xy_to_spiral(q)) == shell_of(xy_to_spiral(p)));
    CHECK(rotate_quarter(rotate_quarter(rotate_quarter(q))) == p);
  }
}
