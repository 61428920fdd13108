#include <doctest.h>

#include "../support/oracles.hpp"
#include "tribq/reference.hpp"
#include "tribq/verify.hpp"
#include "tribq/word.hpp"

using namespace tribq;

TEST_CASE("constants") {
  const Constants& k = Constants::get();
  CHECK(minimal_polynomial_residual(k) < HighFloat("1e-90"));
  CHECK(static_cast<double>(k.psi) == doctest::Approx(1.8392867552).epsilon(1e-10));
  CHECK(static_cast<double>(k.phi) == doctest::Approx(1.6180339887).epsilon(1e-10));
  CHECK(static_cast<double>(k.c1) == doctest::Approx(1.1374515722826).epsilon(1e-12));
  // Binet form reproduces the integers.
  for (int n = 0; n <= 60; ++n) {
    const HighFloat v = binet(k, n);
    CHECK(abs(v - round(v)) < HighFloat("1e-60"));
  }
  CHECK(abs(binet(k, 20) - 223317) < HighFloat("1e-60"));
}

TEST_CASE("binet bounds") {
  const BinetReport r = check_binet_bounds(200);
  CHECK(r.ok());
  CHECK(r.decided);
  CHECK(r.shifted_constants_match);
  CHECK_FALSE(r.shifted_c1_bound.holds_everywhere);
  for (const auto& b : r.bounds) {
    CHECK(b.holds_everywhere);
    CHECK(b.max_ratio < b.factor);
  }
}

TEST_CASE("shift bounds and extrema") {
  const ShiftReport r = check_repr_shift_bounds();
  CHECK(r.ok());
  CHECK(r.bounds[0].argmin == reference::kShiftArgmin);
  CHECK(r.bounds[0].argmax == reference::kShiftArgmax);
  CHECK(r.bounds[0].min_value == doctest::Approx(-0.58647).epsilon(1e-4));
  CHECK(r.bounds[0].max_value == doctest::Approx(0.8466).epsilon(1e-4));
}

TEST_CASE("floor exceptions") {
  const FloorExceptionReport r = first_floor_exceptions(20000);
  CHECK(r.ok());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.first[i] == reference::kFirstFloorExceptions[i]);
  }
  CHECK(guarded_floor_psi_power(1, 10) == 18);
  CHECK(guarded_floor_psi_power(-1, 10) == 5);
}

TEST_CASE("count bounds report each link") {
  const CountBoundReport r = check_count_bounds(20000);
  CHECK(r.floor_form_ok());
  CHECK_FALSE(r.ok());
  CHECK(r.real_lower[0].first_failure == 2);
  CHECK(r.real_lower[1].first_failure == 1);
  CHECK(r.c_ratio_violations == 0);
}

namespace {

// Plain include/exclude recursion over the cells r + c < n.
unsigned brute_triangle(unsigned n) {
  const auto cells = oracle::antidiagonal_walk(n);
  std::vector<std::size_t> chosen;
  unsigned best = 0;
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      best = std::max(best, static_cast<unsigned>(chosen.size()));
      return;
    }
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](std::size_t q) { return oracle::queen_line(cells[q], cells[i]); });
    if (free) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  go(go, 0);
  return best;
}

}  // namespace

TEST_CASE("non-attacking triangle queens") {
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(max_nonattacking_triangle(n) == brute_triangle(n));
  }
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(3 * max_nonattacking_triangle(n) <= 2 * n + 3);
  }
  CHECK_THROWS((void)max_nonattacking_triangle(13));
}
