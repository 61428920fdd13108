#pragma once

// High-precision checks of the growth bounds on Tribonacci numbers and the
// A/B/C and letter-count sequences, plus a small exact queen solver.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace tribq {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

struct HighComplex {
  HighFloat re;
  HighFloat im;
};

/// Roots of x^3 = x^2 + x + 1 and the coefficients of
/// T_n = c1 psi^n + c2 psi2^n + c3 psi3^n, derived at runtime.
struct Constants {
  HighFloat psi;
  HighFloat phi;
  HighFloat c1;
  HighComplex psi2;
  HighComplex psi3;
  HighComplex c2;
  HighComplex c3;

  /// Computed once; safe to call from several threads.
  static const Constants& get();
};

/// |psi^3 - psi^2 - psi - 1|, for checking working precision.
[[nodiscard]] HighFloat minimal_polynomial_residual(const Constants& k);

/// c1 psi^n + 2 Re(c2 psi2^n).
[[nodiscard]] HighFloat binet(const Constants& k, int n);

/// One inequality |lhs_n| <= factor * ratio^n over 0 <= n <= n_max.
struct BinetBound {
  std::string name;
  double factor = 0.0;
  bool holds_everywhere = false;       // for every n in range
  std::optional<int> first_holding;    // least n0 with the bound holding on [n0, n_max]
  double max_ratio = 0.0;              // max |lhs_n| / ratio^n (compare with factor)
  int argmax_ratio = 0;
  double min_relative_margin = 0.0;    // min (rhs - |lhs|) / rhs over the holding range
  std::vector<int> failing;            // every failing n (small in practice)
};

struct BinetReport {
  int n_max = 0;
  double ratio = 0.738;
  std::vector<BinetBound> bounds;      // the four bounds with the derived c1
  BinetBound shifted_c1_bound;         // bound one with c1 replaced by 0.336228 (the T_{n-2} coefficient)
  bool shifted_constants_match = false;  // c1/psi^2 = 0.336228.., c2/psi2^2 = -0.168114.. - 0.198324..i
  bool decided = true;                 // every comparison cleared the 1e-10 relative margin
  [[nodiscard]] bool ok() const;
};

/// n_max <= 200.
[[nodiscard]] BinetReport check_binet_bounds(int n_max = 200);

struct ShiftBound {
  int zeros = 1;        // digits appended: 1, 2 or 3
  double lower = 0.0;   // open interval for [(n)_T 0^k]_T - psi^k n
  double upper = 0.0;
  double min_value = 0.0;
  std::uint64_t argmin = 0;
  double max_value = 0.0;
  std::uint64_t argmax = 0;
  double min_margin = 0.0;  // distance of the extrema from the interval ends
  [[nodiscard]] bool ok() const;
};

struct ShiftReport {
  std::uint64_t limit = 0;  // n ranges over [0, limit)
  std::array<ShiftBound, 3> bounds{};
  [[nodiscard]] bool ok() const;
};

/// The three double inequalities for 0 <= n < limit (default T_19 = 121415).
[[nodiscard]] ShiftReport check_repr_shift_bounds(std::uint64_t limit = 121415);

/// floor(x) for x = psi^k * n (or n / psi^k when k < 0), exact: falls back
/// to the 100-digit value when the long double is near an integer.
[[nodiscard]] std::uint64_t guarded_floor_psi_power(int k, std::uint64_t n);

struct FloorExceptionReport {
  std::uint64_t scanned = 0;                      // n in [1, scanned]
  std::array<std::optional<std::uint64_t>, 3> first{};  // least n with A/B/C = floor + 1
  std::uint64_t bound_violations = 0;             // floor - k <= X_n <= floor + 1 failures
  std::uint64_t guarded_evaluations = 0;          // floors that needed extended precision
  [[nodiscard]] bool ok() const noexcept { return bound_violations == 0; }
};

/// Scans 1 <= n <= limit with the closed-form A/B/C.
[[nodiscard]] FloorExceptionReport first_floor_exceptions(std::uint64_t limit = 20000);

/// The chain floor(x) <= x <= N <= floor(x) + 1 with x = n / psi^k and N the
/// count of the k-th letter in t_1..t_n, checked link by link.
struct CountLink {
  std::uint64_t failures = 0;
  std::uint64_t first_failure = 0;  // 0 when none
};

struct CountBoundReport {
  std::uint64_t n_max = 0;
  std::array<CountLink, 3> floor_lower{};  // floor(x) <= N
  std::array<CountLink, 3> real_lower{};   // x <= N
  std::array<CountLink, 3> upper{};        // N <= floor(x) + 1
  std::uint64_t c_ratio_violations = 0;    // psi C_n > C_{n+1} failures, 2 <= n <= n_max
  double min_c_ratio_slack = 0.0;          // min psi C_n - C_{n+1}

  /// Every link, including x <= N.
  [[nodiscard]] bool ok() const noexcept;
  /// Every link except x <= N.
  [[nodiscard]] bool floor_form_ok() const noexcept;
};

[[nodiscard]] CountBoundReport check_count_bounds(std::uint64_t n_max = 100000);

/// Maximum number of mutually non-attacking queens on the cells r + c < n
/// of the quadrant (exhaustive search). n <= 12.
[[nodiscard]] unsigned max_nonattacking_triangle(unsigned n);

}  // namespace tribq
