#include <doctest.h>

#include "../support/oracles.hpp"
#include "tribq/reference.hpp"
#include "tribq/xymp.hpp"

using namespace tribq;

TEST_CASE("golden rows") {
  const XympTable t = XympTable::build_mex(30);
  for (std::size_t n = 0; n < reference::kXympRows.size(); ++n) {
    const auto& g = reference::kXympRows[n];
    CAPTURE(n);
    CHECK(t[n] == XympRow{n, g.x, g.y, g.m, g.p});
    CHECK(row_closed(n) == t[n]);
    CHECK(to_char(label_row(t, n)) == g.label);
  }
}

TEST_CASE("build_mex against the set-based recurrence") {
  const auto slow = oracle::xymp(3000);
  const XympTable t = XympTable::build_mex(3000);
  for (std::size_t n = 0; n < slow.size(); ++n) {
    REQUIRE(t[n].x == slow[n].x);
    REQUIRE(t[n].y == slow[n].y);
    REQUIRE(t[n].m == slow[n].m);
    REQUIRE(t[n].p == slow[n].p);
  }
}

TEST_CASE("differences") {
  const XympTable t = XympTable::build_mex(20);
  const auto dp = delta_stream(t, XympColumn::p, 11);
  CHECK(dp == std::vector<std::int64_t>{3, 5, 4, 5, 3, 5, 4, 5, 5, 4, 5});
  const auto dx = delta_stream(t, XympColumn::x, 11);
  CHECK(dx == std::vector<std::int64_t>{1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2});
  CHECK(delta_stream(t, XympColumn::y, 1).front() == 2);
  CHECK(theme_values(XympColumn::m) == std::array<std::int64_t, 3>{1, 2, 1});
}

TEST_CASE("labels and invariant violations") {
  const XympTable t = XympTable::build_mex(10);
  CHECK(label_row(t, 0) == Letter::c);
  CHECK(label_row(t, 2) == Letter::b);
  CHECK(label_row(t, 7) == Letter::a);
  CHECK_THROWS((void)label_row(t, 9));  // needs row 10
  CHECK(column_name(XympColumn::p) == "P");
}

TEST_CASE("closed form over a long horizon") {
  const XympTable t = XympTable::build_mex(200001);
  for (std::uint64_t n = 0; n <= 200000; n += 7) {
    REQUIRE(row_closed(n) == t[n]);
  }
}
