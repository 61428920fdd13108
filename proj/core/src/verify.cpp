#include "tribq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tribq/numeration.hpp"
#include "tribq/parallel.hpp"
#include "tribq/word.hpp"

namespace tribq {
namespace {

using boost::multiprecision::abs;
using boost::multiprecision::floor;
using boost::multiprecision::sqrt;

HighComplex mul(const HighComplex& a, const HighComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HighComplex div(const HighComplex& a, const HighComplex& b) {
  const HighFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

HighComplex cpow(HighComplex z, int n) {
  HighComplex out{1, 0};
  for (int i = 0; i < n; ++i) {
    out = mul(out, z);
  }
  return out;
}

HighFloat to_high(const BigUint& v) { return HighFloat(v.str()); }

// Rows closer than this to a decision boundary are flagged as undecided.
const HighFloat& decision_margin() {
  static const HighFloat m("1e-10");
  return m;
}

// psi^k as long double for k in [-3, 3].
long double psi_power_ld(int k) {
  static const auto table = [] {
    std::array<long double, 7> t{};
    const Constants& c = Constants::get();
    for (int j = -3; j <= 3; ++j) {
      t[static_cast<std::size_t>(j + 3)] = static_cast<long double>(pow(c.psi, j));
    }
    return t;
  }();
  return table.at(static_cast<std::size_t>(k + 3));
}

std::uint64_t floor_psi_power(int k, std::uint64_t n, bool* guarded) {
  if (k < -3 || k > 3) {
    throw std::invalid_argument("floor_psi_power: |k| <= 3");
  }
  const long double x = static_cast<long double>(n) * psi_power_ld(k);
  const long double f = std::floor(x);
  // Band well above the long double rounding error at these magnitudes.
  constexpr long double kGuard = 1e-9L;
  if (x - f >= kGuard && f + 1 - x >= kGuard) {
    if (guarded != nullptr) {
      *guarded = false;
    }
    return static_cast<std::uint64_t>(f);
  }
  if (guarded != nullptr) {
    *guarded = true;
  }
  const HighFloat hx = HighFloat(n) * pow(Constants::get().psi, k);
  return static_cast<std::uint64_t>(floor(hx));
}

}  // namespace

// ---------------------------------------------------------------- constants

const Constants& Constants::get() {
  static const Constants k = [] {
    Constants c;
    HighFloat x("1.8392867552");
    for (int i = 0; i < 20; ++i) {
      const HighFloat p = ((x - 1) * x - 1) * x - 1;
      const HighFloat dp = (3 * x - 2) * x - 1;
      x -= p / dp;
    }
    c.psi = x;
    c.phi = (1 + sqrt(HighFloat(5))) / 2;
    // x^3 - x^2 - x - 1 = (x - psi)(x^2 + (psi - 1) x + 1/psi)
    const HighFloat lin = c.psi - 1;
    const HighFloat cst = 1 / c.psi;
    c.psi2 = {-lin / 2, sqrt(4 * cst - lin * lin) / 2};
    c.psi3 = {c.psi2.re, -c.psi2.im};
    // Residue coefficients for T_{-3} = T_{-2} = 0, T_{-1} = 1:  c = r^3 / p'(r).
    c.c1 = pow(c.psi, 3) / ((3 * c.psi - 2) * c.psi - 1);
    const HighComplex r2 = mul(c.psi2, c.psi2);
    const HighComplex r3 = mul(r2, c.psi2);
    const HighComplex dp{3 * r2.re - 2 * c.psi2.re - 1, 3 * r2.im - 2 * c.psi2.im};
    c.c2 = div(r3, dp);
    c.c3 = {c.c2.re, -c.c2.im};
    return c;
  }();
  return k;
}

HighFloat minimal_polynomial_residual(const Constants& k) {
  return abs(((k.psi - 1) * k.psi - 1) * k.psi - 1);
}

HighFloat binet(const Constants& k, int n) {
  const HighComplex z = mul(k.c2, cpow(k.psi2, n));
  return k.c1 * pow(k.psi, n) + 2 * z.re;
}

// ---------------------------------------------------------------- Binet bounds

bool BinetReport::ok() const {
  return shifted_constants_match && decided &&
         std::all_of(bounds.begin(), bounds.end(),
                     [](const BinetBound& b) { return b.holds_everywhere; });
}

BinetReport check_binet_bounds(int n_max) {
  if (n_max < 0 || n_max > 200) {
    throw std::invalid_argument("check_binet_bounds: 0 <= n_max <= 200");
  }
  const Constants& k = Constants::get();
  BinetReport rep;
  rep.n_max = n_max;

  std::vector<HighFloat> t(static_cast<std::size_t>(n_max) + 4);
  for (int n = 0; n < static_cast<int>(t.size()); ++n) {
    t[static_cast<std::size_t>(n)] = to_high(tribonacci(n));
  }
  const HighFloat ratio("0.738");
  const HighFloat psi2 = k.psi * k.psi;
  const HighFloat psi3 = psi2 * k.psi;
  const HighFloat shifted_c1("0.336228");

  struct Spec {
    const char* name;
    const char* factor;
  };
  const Spec specs[4] = {{"|T_n - c1 psi^n|", "0.283"},
                         {"|T_{n+1} - psi T_n|", "0.731"},
                         {"|T_{n+2} - psi^2 T_n|", "1.113"},
                         {"|T_{n+3} - psi^3 T_n|", "1.877"}};

  auto evaluate = [&](const char* name, const char* factor_text, auto&& lhs_at, bool track_decided) {
    BinetBound b;
    b.name = name;
    const HighFloat factor(factor_text);
    b.factor = static_cast<double>(factor);
    std::vector<bool> holds(static_cast<std::size_t>(n_max) + 1);
    std::vector<HighFloat> margin(holds.size());
    HighFloat scale = 1;  // ratio^n
    HighFloat best_ratio = -1;
    for (int n = 0; n <= n_max; ++n) {
      const HighFloat lhs = abs(lhs_at(n));
      const HighFloat rhs = factor * scale;
      const auto i = static_cast<std::size_t>(n);
      holds[i] = lhs <= rhs;
      margin[i] = (rhs - lhs) / rhs;
      if (track_decided && abs(margin[i]) < decision_margin()) {
        rep.decided = false;
      }
      const HighFloat r = lhs / scale;
      if (r > best_ratio) {
        best_ratio = r;
        b.argmax_ratio = n;
      }
      if (!holds[i]) {
        b.failing.push_back(n);
      }
      scale *= ratio;
    }
    b.max_ratio = static_cast<double>(best_ratio);
    b.holds_everywhere = b.failing.empty();
    int first = n_max + 1;
    while (first > 0 && holds[static_cast<std::size_t>(first - 1)]) {
      --first;
    }
    if (first <= n_max) {
      b.first_holding = first;
      HighFloat lo = margin[static_cast<std::size_t>(first)];
      for (int n = first; n <= n_max; ++n) {
        lo = std::min(lo, margin[static_cast<std::size_t>(n)]);
      }
      b.min_relative_margin = static_cast<double>(lo);
    }
    return b;
  };

  auto tn = [&](int n) -> const HighFloat& { return t[static_cast<std::size_t>(n)]; };
  rep.bounds.push_back(evaluate(specs[0].name, specs[0].factor,
                                [&](int n) -> HighFloat { return tn(n) - k.c1 * pow(k.psi, n); }, true));
  rep.bounds.push_back(evaluate(specs[1].name, specs[1].factor,
                                [&](int n) -> HighFloat { return tn(n + 1) - k.psi * tn(n); }, true));
  rep.bounds.push_back(evaluate(specs[2].name, specs[2].factor,
                                [&](int n) -> HighFloat { return tn(n + 2) - psi2 * tn(n); }, true));
  rep.bounds.push_back(evaluate(specs[3].name, specs[3].factor,
                                [&](int n) -> HighFloat { return tn(n + 3) - psi3 * tn(n); }, true));
  rep.shifted_c1_bound = evaluate("|T_n - 0.336228 psi^n|", specs[0].factor,
                                 [&](int n) -> HighFloat { return tn(n) - shifted_c1 * pow(k.psi, n); }, false);

  // 0.336228.. and -0.168114.. - 0.198324..i are the coefficients of T_{n-2}.
  const HighFloat tol("1e-6");
  const HighFloat c1_shift = k.c1 / psi2;
  const HighComplex shifted_c2 = div(k.c2, mul(k.psi2, k.psi2));
  rep.shifted_constants_match =
      abs(c1_shift - HighFloat("0.336228")) < tol &&
      abs(shifted_c2.re - HighFloat("-0.168114")) < tol &&
      abs(shifted_c2.im - HighFloat("-0.198324")) < tol &&
      abs(k.psi2.re - HighFloat("-0.419643")) < tol && abs(k.psi2.im - HighFloat("0.606291")) < tol;
  return rep;
}

// ---------------------------------------------------------------- shift bounds

bool ShiftBound::ok() const {
  return min_value > lower && max_value < upper && min_margin >= 1e-10;
}

bool ShiftReport::ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const ShiftBound& b) { return b.ok(); });
}

ShiftReport check_repr_shift_bounds(std::uint64_t limit) {
  const Constants& k = Constants::get();
  const std::array<HighFloat, 3> power{k.psi, k.psi * k.psi, k.psi * k.psi * k.psi};

  struct Extrema {
    bool any = false;
    std::array<HighFloat, 3> lo{};
    std::array<std::uint64_t, 3> arglo{};
    std::array<HighFloat, 3> hi{};
    std::array<std::uint64_t, 3> arghi{};
  };

  auto fold = [](Extrema a, Extrema b) {
    if (!b.any) {
      return a;
    }
    if (!a.any) {
      return b;
    }
    for (std::size_t j = 0; j < 3; ++j) {
      // Ties resolve to the smaller n: chunks fold in ascending order.
      if (b.lo[j] < a.lo[j]) {
        a.lo[j] = b.lo[j];
        a.arglo[j] = b.arglo[j];
      }
      if (b.hi[j] > a.hi[j]) {
        a.hi[j] = b.hi[j];
        a.arghi[j] = b.arghi[j];
      }
    }
    return a;
  };

  const Extrema ext = parallel_reduce(
      std::uint64_t{0}, limit, Extrema{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Extrema e;
        for (std::uint64_t n = lo; n < hi; ++n) {
          const TribRepr r = canonical_repr(n);
          static constexpr const char* kZeros[3] = {"0", "00", "000"};
          for (std::size_t j = 0; j < 3; ++j) {
            const HighFloat d = HighFloat(eval_repr_u64(r.append(kZeros[j]))) - power[j] * n;
            if (!e.any || d < e.lo[j]) {
              e.lo[j] = d;
              e.arglo[j] = n;
            }
            if (!e.any || d > e.hi[j]) {
              e.hi[j] = d;
              e.arghi[j] = n;
            }
          }
          e.any = true;
        }
        return e;
      },
      fold);

  ShiftReport rep;
  rep.limit = limit;
  const std::array<std::pair<const char*, const char*>, 3> intervals{
      {{"-0.596", "0.856"}, {"-0.883", "1.460"}, {"-1.461", "2.298"}}};
  for (std::size_t j = 0; j < 3; ++j) {
    ShiftBound& b = rep.bounds[j];
    b.zeros = static_cast<int>(j + 1);
    const HighFloat lower(intervals[j].first);
    const HighFloat upper(intervals[j].second);
    b.lower = static_cast<double>(lower);
    b.upper = static_cast<double>(upper);
    if (ext.any) {
      b.min_value = static_cast<double>(ext.lo[j]);
      b.argmin = ext.arglo[j];
      b.max_value = static_cast<double>(ext.hi[j]);
      b.argmax = ext.arghi[j];
      b.min_margin = static_cast<double>(std::min(HighFloat(ext.lo[j] - lower), HighFloat(upper - ext.hi[j])));
    } else {
      b.min_margin = std::numeric_limits<double>::infinity();
    }
  }
  return rep;
}

// ---------------------------------------------------------------- floors

std::uint64_t guarded_floor_psi_power(int k, std::uint64_t n) {
  return floor_psi_power(k, n, nullptr);
}

FloorExceptionReport first_floor_exceptions(std::uint64_t limit) {
  FloorExceptionReport rep;
  rep.scanned = limit;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const AbcIndex abc = abc_closed(n);
    const std::array<std::uint64_t, 3> value{abc.a, abc.b, abc.c};
    for (int j = 0; j < 3; ++j) {
      bool guarded = false;
      const std::uint64_t f = floor_psi_power(j + 1, n, &guarded);
      rep.guarded_evaluations += guarded ? 1 : 0;
      const std::uint64_t v = value[static_cast<std::size_t>(j)];
      // floor - (j+1) <= v <= floor + 1
      if (v + static_cast<std::uint64_t>(j + 1) < f || v > f + 1) {
        ++rep.bound_violations;
      }
      auto& first = rep.first[static_cast<std::size_t>(j)];
      if (!first && v == f + 1) {
        first = n;
      }
    }
  }
  return rep;
}

namespace {

void record(CountLink& link, std::uint64_t n) {
  if (link.failures++ == 0) {
    link.first_failure = n;
  }
}

bool clean(const std::array<CountLink, 3>& links) {
  return std::all_of(links.begin(), links.end(), [](const CountLink& l) { return l.failures == 0; });
}

}  // namespace

bool CountBoundReport::ok() const noexcept { return floor_form_ok() && clean(real_lower); }

bool CountBoundReport::floor_form_ok() const noexcept {
  return clean(floor_lower) && clean(upper) && c_ratio_violations == 0;
}

CountBoundReport check_count_bounds(std::uint64_t n_max) {
  CountBoundReport rep;
  rep.n_max = n_max;
  WordStream t = WordStream::tribonacci();
  LetterCounts counts;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    switch (t.next()) {
      case Letter::a:
        ++counts.a;
        break;
      case Letter::b:
        ++counts.b;
        break;
      case Letter::c:
        ++counts.c;
        break;
    }
    const std::array<std::uint64_t, 3> value{counts.a, counts.b, counts.c};
    for (std::size_t j = 0; j < 3; ++j) {
      // x = n / psi^k is irrational for n >= 1, so x <= N  <=>  N >= floor(x) + 1.
      const std::uint64_t f = floor_psi_power(-static_cast<int>(j + 1), n, nullptr);
      const std::uint64_t v = value[j];
      if (v < f) {
        record(rep.floor_lower[j], n);
      }
      if (v < f + 1) {
        record(rep.real_lower[j], n);
      }
      if (v > f + 1) {
        record(rep.upper[j], n);
      }
    }
  }

  const std::vector<AbcIndex> abc = abc_mex(n_max + 1);
  const Constants& k = Constants::get();
  const auto psi = static_cast<long double>(k.psi);
  bool first = true;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    long double slack = psi * static_cast<long double>(abc[n].c) -
                        static_cast<long double>(abc[n + 1].c);
    if (std::fabs(slack) < 1e-6L) {
      slack = static_cast<long double>(k.psi * HighFloat(abc[n].c) - HighFloat(abc[n + 1].c));
    }
    if (slack <= 0) {
      ++rep.c_ratio_violations;
    }
    if (first || slack < rep.min_c_ratio_slack) {
      rep.min_c_ratio_slack = static_cast<double>(slack);
      first = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- small solver

namespace {

struct TriangleSearch {
  unsigned n;
  unsigned best = 0;

  void run(unsigned row, unsigned placed, std::uint32_t cols, std::uint32_t diags,
           std::uint32_t antidiags) {
    if (placed + (n - row) <= best) {
      return;
    }
    if (row == n) {
      best = placed;
      return;
    }
    for (unsigned c = 0; c + row < n; ++c) {
      const std::uint32_t cb = 1U << c;
      const std::uint32_t db = 1U << (c + n - row);  // c - r shifted nonnegative
      const std::uint32_t ab = 1U << (c + row);
      if ((cols & cb) || (diags & db) || (antidiags & ab)) {
        continue;
      }
      run(row + 1, placed + 1, cols | cb, diags | db, antidiags | ab);
    }
    run(row + 1, placed, cols, diags, antidiags);
  }
};

}  // namespace

unsigned max_nonattacking_triangle(unsigned n) {
  if (n > 12) {
    throw std::invalid_argument("max_nonattacking_triangle: n <= 12");
  }
  TriangleSearch s{n};
  s.run(0, 0, 0, 0, 0);
  return s.best;
}

}  // namespace tribq
