#include "tribq/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "tribq/greedy.hpp"
#include "tribq/grundy.hpp"
#include "tribq/numeration.hpp"
#include "tribq/reference.hpp"
#include "tribq/verify.hpp"
#include "tribq/word.hpp"
#include "tribq/xymp.hpp"

namespace tribq::cli {
namespace {

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

template <class Seq>
std::string join(const Seq& seq, std::string_view sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) {
      os << sep;
    }
    os << v;
    first = false;
  }
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(const CheckSink& sink) : sink_(sink) {}

  void add(std::string name, Claim claim, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), claim, passed, std::move(detail)});
    if (sink_) {
      sink_(checks_.back());
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  const CheckSink& sink_;
  std::vector<Check> checks_;
};

// Every binary string of length exactly len.
std::vector<std::string> strings_of_length(unsigned len) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string s(len, '0');
    for (unsigned i = 0; i < len; ++i) {
      if ((mask >> (len - 1 - i)) & 1U) {
        s[i] = '1';
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> strings_up_to(unsigned max_len) {
  std::vector<std::string> out;
  for (unsigned len = 0; len <= max_len; ++len) {
    auto more = strings_of_length(len);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::uint64_t eval(std::string_view s) { return eval_repr_u64(TribRepr(s)); }

// ---------------------------------------------------------------- numeration

void numeration_suite(const SuiteOptions&, Recorder& rec) {
  {
    const auto trace = normalize_trace(TribRepr(reference::kNormalizeInput));
    std::vector<std::string> got;
    for (const auto& t : trace) {
      got.push_back(t.bits());
    }
    const bool ok = std::equal(got.begin(), got.end(), reference::kNormalizeTrace.begin(),
                               reference::kNormalizeTrace.end());
    rec.add("normalize trace", Claim::proven, ok, join(got, " -> "));
  }

  {
    // [x]=[y] <=> [x0]=[y0]: the map [x] -> [x0] is well defined and injective.
    const auto all = strings_up_to(12);
    std::unordered_map<std::uint64_t, std::uint64_t> forward;
    std::unordered_map<std::uint64_t, std::uint64_t> backward;
    std::uint64_t bad = 0;
    for (const auto& x : all) {
      const std::uint64_t v = eval(x);
      const std::uint64_t v0 = eval(x + "0");
      const auto [f, fnew] = forward.emplace(v, v0);
      const auto [b, bnew] = backward.emplace(v0, v);
      bad += static_cast<std::uint64_t>(f->second != v0) + static_cast<std::uint64_t>(b->second != v);
    }
    rec.add("append-zero lemma, |x|,|y| <= 12", Claim::proven, bad == 0,
            cat(all.size(), " strings, ", forward.size(), " value classes, ", bad, " conflicts"));
  }

  {
    const auto xs = strings_up_to(8);
    std::uint64_t bad = 0;
    std::uint64_t combos = 0;
    for (unsigned len = 0; len <= 6; ++len) {
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
      for (const auto& w : strings_of_length(len)) {
        const std::uint64_t ew = eval(w);
        for (const auto& x : xs) {
          ++combos;
          const auto [it, fresh] = seen.emplace(std::pair{eval(x + w), ew}, eval(x));
          bad += static_cast<std::uint64_t>(!fresh && it->second != eval(x));
        }
      }
    }
    rec.add("suffix cancellation, |w| <= 6, |x|,|y| <= 8", Claim::proven, bad == 0,
            cat(combos, " (x, w) pairs, ", bad, " conflicts"));
  }

  {
    // Every length-20 string (shorter ones are zero-padded) with value <= limit.
    constexpr std::uint64_t kLimit = 10000;
    constexpr int kLen = 20;
    std::array<std::uint64_t, kLen> weight{};
    std::array<std::uint64_t, kLen> prefix_weight{};
    for (int j = 0; j < kLen; ++j) {
      weight[j] = tribonacci_u64(kLen - 1 - j);
      prefix_weight[j] = j + 1 < kLen ? tribonacci_u64(kLen - 2 - j) : 0;
    }
    std::vector<std::int64_t> quantity(kLimit + 1, -1);
    std::uint64_t reps = 0;
    std::uint64_t bad = 0;
    auto dfs = [&](auto&& self, int j, std::uint64_t value, std::uint64_t prefix) -> void {
      if (value > kLimit) {
        return;
      }
      if (j == kLen - 1) {
        for (std::uint64_t last = 0; last <= 1; ++last) {
          const std::uint64_t n = value + last * weight[j];
          if (n > kLimit) {
            continue;
          }
          ++reps;
          const auto q = static_cast<std::int64_t>(prefix + last);
          if (quantity[n] < 0) {
            quantity[n] = q;
          } else if (quantity[n] != q) {
            ++bad;
          }
        }
        return;
      }
      self(self, j + 1, value, prefix);
      self(self, j + 1, value + weight[j], prefix + prefix_weight[j]);
    };
    dfs(dfs, 0, 0, 0);
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
      bad += static_cast<std::uint64_t>(quantity[n] != static_cast<std::int64_t>(count_letters(n).a));
    }
    rec.add("last-digit invariant, n <= 10^4, length <= 20", Claim::proven, bad == 0,
            cat(reps, " representations, ", bad, " mismatches"));
  }

  {
    std::uint64_t bad = 0;
    const auto all = strings_up_to(14);
    for (const auto& s : all) {
      const TribRepr e(s);
      const TribRepr norm = normalize(e);
      const BigUint v = eval_repr(e);
      bool ok = norm == canonical_repr(v) && normalize(norm) == norm && norm.is_canonical();
      for (const auto& step : normalize_trace(e)) {
        ok = ok && eval_repr(step) == v;
      }
      bad += static_cast<std::uint64_t>(!ok);
    }
    rec.add("normalize idempotent and value-preserving, length <= 14", Claim::proven, bad == 0,
            cat(all.size(), " strings, ", bad, " failures"));
  }

  {
    constexpr std::uint64_t kLimit = 1000000;
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n <= kLimit; ++n) {
      const TribRepr e = canonical_repr(n);
      bad += static_cast<std::uint64_t>(eval_repr_u64(e) != n || (n > 0 && !e.is_canonical()));
    }
    rec.add("canonical_repr / eval_repr round trip, n <= 10^6", Claim::proven, bad == 0,
            cat(bad, " failures"));
  }

  {
    bool ok = true;
    for (unsigned m = 3; m <= 15 && ok; ++m) {
      const auto u = enumerate_reprs(m);
      std::vector<TribRepr> expect;
      for (const auto& [head, shift] : std::array<std::pair<const char*, unsigned>, 3>{{{"0", 1U}, {"10", 2U}, {"110", 3U}}}) {
        for (const auto& t : enumerate_reprs(m - shift)) {
          expect.push_back(TribRepr(head).append(t.bits()));
        }
      }
      ok = u == expect && u.size() == tribonacci_u64(static_cast<int>(m));
    }
    rec.add("U_m = 0 U_{m-1} + 10 U_{m-2} + 110 U_{m-3}, 3 <= m <= 15", Claim::proven, ok);
  }
}

// ---------------------------------------------------------------------- word

void word_suite(const SuiteOptions& opt, Recorder& rec) {
  const std::uint64_t horizon = opt.horizon;
  const std::uint64_t count_horizon = std::min<std::uint64_t>(horizon, 100000);

  {
    bool ok = true;
    for (unsigned k = 0; k <= 7; ++k) {
      ok = ok && theme_morphism().apply_power("c", k) + "c" == "c" + tau_cubed().apply_power("c", k);
    }
    rec.add("theta^k(c) c = c alpha^k(c), k <= 7", Claim::proven, ok);
  }

  {
    WordStream direct = WordStream::theme_fixed_point();
    WordStream shifted = WordStream::theme();
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < horizon; ++i) {
      bad += static_cast<std::uint64_t>(direct.next() != shifted.next());
    }
    rec.add("fixed point of theta equals c.T", Claim::proven, bad == 0,
            cat(horizon, " letters, ", bad, " mismatches"));
  }

  {
    const Word prefix = word_prefix(WordStream::theme(), 10000);
    for (const auto* m : {&tau_prime(), &tau_double_prime()}) {
      const Word image = m->apply(prefix);
      const bool ok = word_prefix(WordStream::tribonacci(), image.size()) == image;
      rec.add(cat(m == &tau_prime() ? "tau'" : "tau''", "(c.T) is a prefix of T"), Claim::proven, ok,
              cat("image of 10^4 letters, length ", image.size()));
    }
  }

  {
    WordStream t = WordStream::tribonacci();
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      bad += static_cast<std::uint64_t>(letter_at(n) != t.next());
    }
    rec.add("letter_at equals streamed T", Claim::proven, bad == 0,
            cat("n <= ", horizon, ", ", bad, " mismatches"));
  }

  const std::vector<AbcIndex> closed_rows = [&] {
    std::vector<AbcIndex> rows(count_horizon + 1);
    for (std::uint64_t n = 0; n <= count_horizon; ++n) {
      rows[n] = abc_closed(n);
    }
    return rows;
  }();
  const std::uint64_t scan_len = closed_rows.back().c + 1;

  // counts[n] = letter counts of t_1 .. t_n.
  std::vector<LetterCounts> counts(scan_len + 1);
  {
    WordStream t = WordStream::tribonacci();
    for (std::uint64_t n = 1; n <= scan_len; ++n) {
      counts[n] = counts[n - 1];
      switch (t.next()) {
        case Letter::a: ++counts[n].a; break;
        case Letter::b: ++counts[n].b; break;
        case Letter::c: ++counts[n].c; break;
      }
    }
  }

  {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= count_horizon; ++n) {
      bad += static_cast<std::uint64_t>(count_letters(n) != counts[n]) +
             static_cast<std::uint64_t>(count_letters_shifted(n) != counts[n]);
    }
    rec.add("letter-count formulas equal scan counts", Claim::proven, bad == 0,
            cat("n <= ", count_horizon, ", ", bad, " mismatches"));
  }

  {
    const auto mex_rows = abc_mex(count_horizon);
    const auto scan_rows = abc_scan(count_horizon);
    const bool ok = mex_rows == closed_rows && scan_rows == closed_rows;
    rec.add("abc_closed = abc_mex = abc_scan", Claim::proven, ok, cat("n <= ", count_horizon));
  }

  const auto& abc = closed_rows;
  auto na = [&](std::uint64_t m) { return counts[m].a; };
  auto nb = [&](std::uint64_t m) { return counts[m].b; };
  auto nc = [&](std::uint64_t m) { return counts[m].c; };

  {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= count_horizon; ++n) {
      bad += static_cast<std::uint64_t>(na(abc[n].a) != n || nb(abc[n].b) != n || nc(abc[n].c) != n);
      bad += static_cast<std::uint64_t>(abc[na(n)].a > n || abc[nb(n)].b > n || abc[nc(n)].c > n);
    }
    rec.add("N_x(X_n) = n and X_{N_x(m)} <= m", Claim::proven, bad == 0,
            cat("n, m <= ", count_horizon, ", ", bad, " failures"));
  }

  {
    const std::uint64_t limit = std::min<std::uint64_t>(count_horizon, 10000);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      const auto& r = abc[n];
      bad += static_cast<std::uint64_t>(abc[r.a].a + 1 != r.b || abc[r.b].a != abc[r.a].b + 1 ||
                                        abc[r.b].a + 1 != r.c);
    }
    rec.add("A_{A_n}+1 = B_n, A_{B_n} = B_{A_n}+1, A_{B_n}+1 = C_n", Claim::proven, bad == 0,
            cat("n <= ", limit, ", ", bad, " failures"));
  }

  {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= count_horizon; ++n) {
      const auto& r = abc[n];
      bad += static_cast<std::uint64_t>(r.a != n + na(n - 1) + nb(n - 1) ||
                                        r.b != r.a + na(r.a) + nb(r.a) ||
                                        r.c != r.b + na(r.b) + nb(r.b));
    }
    rec.add("self-reading identities", Claim::proven, bad == 0,
            cat("n <= ", count_horizon, ", ", bad, " failures"));
  }

  {
    const auto rows = abc_mex(horizon);
    const std::array<std::array<std::int64_t, 3>, 3> values{{{2, 2, 1}, {4, 3, 2}, {7, 6, 4}}};
    const std::array<const char*, 3> names{"A", "B", "C"};
    for (std::size_t which = 0; which < 3; ++which) {
      SubstitutedStream theta(WordStream::theme(), values[which]);
      std::uint64_t bad = 0;
      for (std::uint64_t n = 0; n < horizon; ++n) {
        const auto pick = [&](const AbcIndex& r) {
          return static_cast<std::int64_t>(which == 0 ? r.a : which == 1 ? r.b : r.c);
        };
        bad += static_cast<std::uint64_t>(pick(rows[n + 1]) - pick(rows[n]) != theta.next());
      }
      rec.add(cat("Delta ", names[which], " = Theta(", join(values[which], ","), ")"), Claim::proven,
              bad == 0, cat(horizon, " terms, ", bad, " mismatches"));
    }
  }

  {
    bool ok = true;
    for (unsigned n = 3; n <= 20; ++n) {
      ok = ok && trib_block(n) == trib_block(n - 1) + trib_block(n - 2) + trib_block(n - 3);
    }
    for (unsigned n = 2; n <= 20; ++n) {
      ok = ok && tribonacci_morphism().apply_power("b", n) == trib_block(n - 1) + trib_block(n - 2);
      ok = ok && tribonacci_morphism().apply_power("c", n) == trib_block(n - 1);
    }
    rec.add("block structure of tau^n(a), tau^n(b), tau^n(c), n <= 20", Claim::proven, ok);
  }
}

// ---------------------------------------------------------------------- xymp

void xymp_suite(const SuiteOptions& opt, Recorder& rec) {
  const std::uint64_t horizon = opt.horizon;

  {
    const XympTable t = XympTable::build_mex(30);
    std::uint64_t bad = 0;
    for (std::size_t n = 0; n < reference::kXympRows.size(); ++n) {
      const auto& g = reference::kXympRows[n];
      const auto& r = t[n];
      const auto& s = t[n + 1];
      const AbcIndex abc = abc_closed(n);
      bad += static_cast<std::uint64_t>(
          r.x != g.x || r.y != g.y || r.m != g.m || r.p != g.p || s.x - r.x != g.dx ||
          s.y - r.y != g.dy || s.m - r.m != g.dm || s.p - r.p != g.dp ||
          to_char(label_row(t, n)) != g.label || abc.a != g.a || abc.b != g.b || abc.c != g.c);
    }
    rec.add("golden rows 0..28 (values, differences, labels, A/B/C)", Claim::proven, bad == 0,
            cat(bad, " mismatching rows"));
  }

  const XympTable table = XympTable::build_mex(horizon + 1);

  {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
      bad += static_cast<std::uint64_t>(table[n] != row_closed(n));
    }
    rec.add("build_mex equals row_closed", Claim::proven, bad == 0,
            cat("n <= ", horizon, ", ", bad, " mismatches"));
  }

  for (XympColumn col : {XympColumn::x, XympColumn::y, XympColumn::m, XympColumn::p}) {
    const auto delta = delta_stream(table, col, horizon);
    const auto values = theme_values(col);
    SubstitutedStream theta(WordStream::theme(), values);
    std::uint64_t bad = 0;
    for (std::int64_t d : delta) {
      bad += static_cast<std::uint64_t>(d != theta.next());
    }
    rec.add(cat("Delta ", column_name(col), " = Theta(", join(values, ","), ")"), Claim::proven, bad == 0,
            cat(horizon, " terms, ", bad, " mismatches"));
    if (col == XympColumn::y || col == XympColumn::p) {
      const std::int64_t forbidden = col == XympColumn::y ? 4 : 6;
      const auto hits = std::count(delta.begin(), delta.end(), forbidden);
      rec.add(cat("Delta ", column_name(col), " never ", forbidden), Claim::proven, hits == 0,
              cat(hits, " occurrences"));
    }
  }

  for (const auto& [lhs, rhs] : std::array<std::pair<XympColumn, XympColumn>, 2>{{{XympColumn::x, XympColumn::y}, {XympColumn::m, XympColumn::p}}}) {
    const std::uint64_t bound = std::min(table.column(lhs, horizon), table.column(rhs, horizon));
    std::vector<std::uint8_t> hits(std::max(table.column(lhs, horizon), table.column(rhs, horizon)) + 1);
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      ++hits[table.column(lhs, n)];
      ++hits[table.column(rhs, n)];
    }
    std::uint64_t bad = 0;
    for (std::uint64_t v = 1; v < bound; ++v) {
      bad += static_cast<std::uint64_t>(hits[v] != 1);
    }
    rec.add(cat(column_name(lhs), " and ", column_name(rhs), " are complementary"), Claim::proven, bad == 0,
            cat("values below ", bound, ", ", bad, " gaps or repeats"));
  }

  {
    const std::uint64_t limit = std::min<std::uint64_t>(horizon - 1, 100000);
    std::vector<bool> in_y(table[limit + 1].y + 2);
    std::vector<bool> in_p(table[limit + 1].p + 2);
    for (std::uint64_t n = 0; n <= limit + 1; ++n) {
      in_y[table[n].y] = true;
      in_p[table[n].p] = true;
    }
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      const Letter l = label_row(table, n);
      const bool a = in_y[table[n].x + 1];
      const bool b = in_p[table[n].m + 1];
      const Letter expect = a ? Letter::a : b ? Letter::b : Letter::c;
      bad += static_cast<std::uint64_t>(l != expect);
    }
    rec.add("label a <=> X_n+1 in {Y}, b <=> M_n+1 in {P}", Claim::proven, bad == 0,
            cat("n <= ", limit, ", ", bad, " mismatches"));
  }

  {
    WordStream theta = WordStream::theme();
    std::uint64_t bad = 0;
    std::string violation;
    try {
      for (std::uint64_t n = 0; n < horizon; ++n) {
        bad += static_cast<std::uint64_t>(label_row(table, n) != theta.next());
      }
    } catch (const InvariantViolation& e) {
      violation = e.what();
      ++bad;
    }
    rec.add("row labels equal Theta(a,b,c)", Claim::proven, bad == 0,
            violation.empty() ? cat(horizon, " rows, ", bad, " mismatches") : violation);
  }

  {
    const long double psi = static_cast<long double>(Constants::get().psi);
    long double worst = 0;
    std::uint64_t bad = 0;
    for (std::uint64_t n = std::min<std::uint64_t>(10000, horizon); n <= horizon; ++n) {
      const long double err = std::fabs(static_cast<long double>(table[n].y) / table[n].x - psi);
      worst = std::max(worst, err);
      bad += static_cast<std::uint64_t>(err >= 1e-4L);
    }
    rec.add("|Y_n / X_n - psi| < 1e-4 for n >= 10^4", Claim::proven, bad == 0,
            cat("max ", static_cast<double>(worst), ", ", bad, " failures"));
  }
}

// ------------------------------------------------------------- spiral queens

void spiral_queens_suite(const SuiteOptions& opt, Recorder& rec) {
  const std::uint64_t k_max = opt.queens / 4;
  const auto queens = simulate_spiral(std::max<std::size_t>(4 * k_max + 1, reference::kSpiralQueenCells.size()));

  {
    bool ok = true;
    for (std::size_t i = 0; i < reference::kSpiralQueenCells.size(); ++i) {
      ok = ok && queens[i].cell == reference::kSpiralQueenCells[i];
    }
    for (std::size_t i = 0; i < reference::kSpiralQueenCoords.size(); ++i) {
      const auto& [x, y] = reference::kSpiralQueenCoords[i];
      ok = ok && queens[i + 1].coord == SpiralCoord{x, y};
    }
    std::vector<std::uint64_t> head;
    for (std::size_t i = 0; i < 6; ++i) {
      head.push_back(queens[i].cell);
    }
    rec.add("queen cell prefix and q_1..q_5", Claim::proven, ok, join(head, ", ") + ", ...");
  }

  {
    const XympTable t = XympTable::build_mex(k_max + 1);
    std::uint64_t bad = 0;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      const auto x = static_cast<std::int64_t>(t[k].x);
      const auto y = static_cast<std::int64_t>(t[k].y);
      const std::array<SpiralCoord, 4> expect{{{x, y}, {-y, x}, {-x, -y}, {y, -x}}};
      for (std::uint64_t j = 0; j < 4; ++j) {
        bad += static_cast<std::uint64_t>(queens[4 * k - 3 + j].coord != expect[j]);
      }
    }
    rec.add("q_{4k-3..4k} = (X,Y), (-Y,X), (-X,-Y), (Y,-X)", Claim::proven, bad == 0,
            cat("k <= ", k_max, ", ", bad, " mismatches"));
  }

  {
    LineOccupancy lines;
    bool ok = true;
    for (std::size_t i = 0; i < queens.size(); ++i) {
      ok = ok && (i == 0 || queens[i].cell > queens[i - 1].cell) &&
           !lines.attacked(queens[i].coord.x, queens[i].coord.y) &&
           xy_to_spiral(queens[i].coord) == queens[i].cell;
      lines.place(queens[i].coord.x, queens[i].coord.y);
    }
    rec.add("cells increase and no two queens share a line", Claim::proven, ok,
            cat(queens.size(), " queens, last cell ", queens.back().cell));
  }
}

// ----------------------------------------------------------- quadrant queens

// floor(c phi) = floor((c + sqrt(5 c^2)) / 2), exact for c < 2^31.
std::uint64_t floor_times_phi(std::uint64_t c) {
  const std::uint64_t sq = 5 * c * c;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(sq)));
  while (r * r > sq) {
    --r;
  }
  while ((r + 1) * (r + 1) <= sq) {
    ++r;
  }
  return (c + r) / 2;
}

void quadrant_queens_suite(const SuiteOptions& opt, Recorder& rec) {
  {
    const auto q = simulate_quadrant(reference::kQuadrantQueenCells.size());
    const auto rows = quadrant_rows_by_antidiagonals(reference::kQueenRows.size());
    bool ok = std::equal(rows.begin(), rows.end(), reference::kQueenRows.begin());
    for (std::size_t i = 0; i < q.size(); ++i) {
      ok = ok && q[i].cell == reference::kQuadrantQueenCells[i];
    }
    rec.add("queen cells and S_c prefix", Claim::proven, ok, join(rows, ", "));
  }

  {
    constexpr std::size_t kColumns = 10000;
    const auto by_diag = quadrant_rows_by_antidiagonals(kColumns);
    const auto by_col = simulate_quadrant_by_columns(kColumns);
    rec.add("column scan equals antidiagonal scan", Claim::proven, by_diag == by_col,
            cat(kColumns, " columns"));
  }

  const auto rows = simulate_quadrant_by_columns(opt.slope_columns);
  {
    std::vector<bool> seen(*std::max_element(rows.begin(), rows.end()) + 1);
    bool ok = true;
    for (std::uint64_t r : rows) {
      ok = ok && !seen[r];
      seen[r] = true;
    }
    rec.add("S is injective", Claim::proven, ok, cat(rows.size(), " columns"));
  }

  {
    const SlopeReport one_based = check_slope_bounds(rows);
    SlopeBounds zero_bounds;
    zero_bounds.index_base = 0;
    const SlopeReport zero_based = check_slope_bounds(rows, zero_bounds);
    std::string detail = cat(
        "c < ", rows.size(), ", 1-based residuals upper [", one_based.upper.min_residual, ", ",
        one_based.upper.max_residual, "] lower [", one_based.lower.min_residual, ", ",
        one_based.lower.max_residual, "], ", one_based.violations.size(), " violations; 0-based: ",
        zero_based.violations.size(), " violations");
    if (!zero_based.violations.empty()) {
      detail += cat(", first at c = ", zero_based.violations.front().column);
    }
    rec.add("slope bounds -2 < S - C phi < 1, -3 < S - C/phi < 5", Claim::conjecture, one_based.ok(),
            detail);
  }

  {
    constexpr std::size_t kColumns = 100000;
    const auto w = wythoff_zero_rows(kColumns);
    const bool prefix_ok =
        std::equal(reference::kWythoffRows.begin(), reference::kWythoffRows.end(), w.begin()) && w[0] == 0;
    rec.add("Wythoff W_c prefix", Claim::proven, prefix_ok,
            cat(join(std::vector<std::uint64_t>(w.begin(), w.begin() + 12), ", "), ", ..."));
    // Printed: floor(c phi) above the diagonal. The pairs (floor(n phi), floor(n phi^2)) give
    // floor(c phi) + 1 there instead.
    std::uint64_t printed_bad = 0;
    std::uint64_t corrected_bad = 0;
    std::uint64_t first_printed_bad = 0;
    for (std::uint64_t c = 1; c < kColumns; ++c) {
      const std::uint64_t up = floor_times_phi(c);
      const std::uint64_t down = up - c;  // floor(c / phi)
      const bool printed = w[c] > c ? w[c] == up : w[c] == down;
      const bool corrected = w[c] > c ? w[c] == up + 1 : w[c] == down;
      if (!printed && printed_bad++ == 0) {
        first_printed_bad = c;
      }
      corrected_bad += static_cast<std::uint64_t>(!corrected);
    }
    rec.add("Wythoff W_c = floor(c phi) if W_c > c, floor(c / phi) if W_c < c, as printed", Claim::erratum,
            printed_bad == 0,
            cat("c < ", kColumns, ", ", printed_bad, " mismatches, first at c = ", first_printed_bad,
                " (W = ", w[first_printed_bad], ", floor(c phi) = ", floor_times_phi(first_printed_bad), ")"));
    rec.add("Wythoff W_c = floor(c phi) + 1 if W_c > c, floor(c / phi) if W_c < c", Claim::proven,
            corrected_bad == 0, cat("c < ", kColumns, ", ", corrected_bad, " mismatches"));
  }
}

// ----------------------------------------------------------------- sg-zeros

template <class Queens>
std::vector<std::uint64_t> cells_of(const Queens& queens) {
  std::vector<std::uint64_t> out;
  out.reserve(queens.size());
  for (const auto& q : queens) {
    out.push_back(q.cell);
  }
  return out;
}

void sg_zeros_suite(const SuiteOptions& opt, Recorder& rec) {
  {
    const SGTable t = sg_spiral(opt.cells);
    const auto zeros = t.zero_cells();
    const auto queens = cells_of(simulate_spiral_below(opt.cells));
    rec.add("spiral SG zeros equal queen cells", Claim::proven, zeros == queens,
            cat(opt.cells, " cells, ", zeros.size(), " zeros, ", queens.size(), " queens"));
    std::vector<SGValue> east;
    for (std::int64_t y = 1; y <= 10; ++y) {
      east.push_back(t.at(SpiralCoord{0, y}));
    }
    rec.add("spiral East half-axis prefix", Claim::proven,
            std::equal(east.begin(), east.end(), reference::kSpiralEastRay.begin()), join(east, ", "));
  }

  {
    const SGTable t = sg_quadrant(opt.diagonals);
    const auto zeros = t.zero_cells();
    const auto queens = cells_of(simulate_quadrant_below(cells_in_antidiagonals(opt.diagonals)));
    rec.add("quadrant SG zeros equal queen cells", Claim::proven, zeros == queens,
            cat(opt.diagonals, " antidiagonals, ", zeros.size(), " zeros, ", queens.size(), " queens"));
    bool ok = opt.diagonals >= 9;
    for (std::uint64_t r = 0; r < 9 && ok; ++r) {
      for (std::uint64_t c = 0; r + c < 9; ++c) {
        ok = ok && static_cast<int>(t.at(r, c)) == reference::kQuadrantCorner[r][c];
      }
    }
    std::vector<SGValue> row0;
    for (std::uint64_t c = 0; c < 9 && c < opt.diagonals; ++c) {
      row0.push_back(t.at(0, c));
    }
    rec.add("quadrant corner triangle", Claim::proven, ok, cat("row 0: ", join(row0, ",")));
  }

  {
    constexpr std::uint64_t kDepth = 10000;
    const QuadrantColumns cols = sg_quadrant_columns(2, kDepth);
    std::uint64_t bad = 0;
    for (std::uint64_t r = 0; r < kDepth; ++r) {
      bad += static_cast<std::uint64_t>(cols.columns[1][r] != (r ^ 2U));
    }
    rec.add("quadrant column 1 equals r xor 2", Claim::proven, bad == 0,
            cat("r < ", kDepth, ", ", bad, " mismatches"));
  }

  {
    constexpr std::uint64_t kRows = 2000;
    constexpr std::uint64_t kCols = 1300;
    const SGTable t = sg_wythoff(kRows, kCols);
    const auto w = wythoff_zero_rows(kCols);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t c = 0; c < kCols; ++c) {
      if (w[c] < kRows) {
        expect.push_back(w[c] * kCols + c);
      }
    }
    std::sort(expect.begin(), expect.end());
    const auto zeros = t.zero_cells();
    rec.add("Wythoff SG zeros equal the column scan", Claim::proven, zeros == expect,
            cat(kRows, " x ", kCols, ", ", zeros.size(), " zeros"));
  }
}

// ------------------------------------------------------------------- bounds

void bounds_suite(const SuiteOptions&, Recorder& rec) {
  {
    const BinetReport r = check_binet_bounds();
    for (const auto& b : r.bounds) {
      rec.add(cat("Binet bound ", b.name), Claim::proven, b.holds_everywhere,
              cat("n <= ", r.n_max, ", max |lhs|/", r.ratio, "^n = ", b.max_ratio, " at n = ", b.argmax_ratio,
                  " vs ", b.factor, ", min margin ", b.min_relative_margin));
    }
    rec.add("Binet constants c1 psi^-2, c2 psi2^-2 reproduce the tabulated digits", Claim::proven,
            r.shifted_constants_match && r.decided);
  }

  {
    const ShiftReport r = check_repr_shift_bounds();
    for (const auto& b : r.bounds) {
      rec.add(cat(b.lower, " < [(n)_T 0^", b.zeros, "]_T - psi^", b.zeros, " n < ", b.upper), Claim::proven,
              b.ok(),
              cat("n < ", r.limit, ", min ", b.min_value, " at ", b.argmin, ", max ", b.max_value, " at ",
                  b.argmax));
    }
    const auto& one = r.bounds[0];
    const bool ok = one.argmin == reference::kShiftArgmin && one.argmax == reference::kShiftArgmax &&
                    std::floor(one.min_value * 1000) / 1000 == reference::kShiftMinRoundedDown &&
                    std::ceil(one.max_value * 1000) / 1000 == reference::kShiftMaxRoundedUp;
    rec.add("extrema of [(n)_T 0]_T - psi n: -0.587 (rounded down) at 65915, 0.847 (rounded up) at 78748", Claim::proven, ok,
            cat(one.min_value, " at ", one.argmin, ", ", one.max_value, " at ", one.argmax));
  }

  {
    const FloorExceptionReport r = first_floor_exceptions();
    std::vector<std::string> firsts;
    bool match = true;
    for (std::size_t i = 0; i < 3; ++i) {
      firsts.push_back(r.first[i] ? std::to_string(*r.first[i]) : std::string("none"));
      match = match && r.first[i] == reference::kFirstFloorExceptions[i];
    }
    rec.add("floor bounds on A_n, B_n, C_n", Claim::proven, r.ok(),
            cat("n <= ", r.scanned, ", ", r.bound_violations, " violations"));
    rec.add("first floor exceptions", Claim::proven, match, join(firsts, ", "));
  }

  {
    const CountBoundReport r = check_count_bounds();
    const char* letters = "abc";
    std::vector<std::string> floor_part;
    std::vector<std::string> real_part;
    bool real_ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      floor_part.push_back(cat("N_", letters[i], ": ", r.floor_lower[i].failures + r.upper[i].failures));
      real_part.push_back(cat("N_", letters[i], ": ", r.real_lower[i].failures, " (first n = ",
                              r.real_lower[i].first_failure, ")"));
      real_ok = real_ok && r.real_lower[i].failures == 0;
    }
    rec.add("floor(n / psi^k) <= N(n) <= floor(n / psi^k) + 1", Claim::proven, r.floor_form_ok(),
            cat("n <= ", r.n_max, ", failures ", join(floor_part, ", ")));
    rec.add("n / psi^k <= N(n) as printed", Claim::erratum, real_ok, cat("failures ", join(real_part, ", ")));
    rec.add("psi C_n > C_{n+1}", Claim::proven, r.c_ratio_violations == 0,
            cat(r.c_ratio_violations, " failures, min slack ", r.min_c_ratio_slack));
  }

  {
    bool ok = true;
    std::vector<unsigned> best;
    for (unsigned n = 1; n <= 12; ++n) {
      best.push_back(max_nonattacking_triangle(n));
      ok = ok && 3 * best.back() <= 2 * n + 3;
    }
    rec.add("non-attacking queens on r + c < n at most 2n/3 + 1", Claim::proven, ok,
            cat("n = 1..12: ", join(best, " ")));
  }
}

// -------------------------------------------------------------- quasiperiod

void quasiperiod_suite(const SuiteOptions& opt, Recorder& rec) {
  const QuadrantColumns cols = sg_quadrant_columns(opt.columns + 1, opt.depth);
  for (std::size_t c = 0; c < cols.columns.size(); ++c) {
    const auto& column = cols.columns[c];
    const QuasiPeriodReport r = column_quasiperiod(column, 16);
    std::string detail;
    if (r.settled) {
      detail = cat("preperiod ", r.preperiod, ", last violation ", r.last_violation, ", numerator [",
                   join(r.numerator, ","), "]");
    } else {
      const std::size_t p = least_settling_period(column, 4096);
      detail = cat("no period-16 tail at depth ", r.depth, ", last violation ", r.last_violation,
                   p == 0 ? std::string(", no power-of-two period <= 4096 settles")
                          : cat(", settles with period ", p, " (last violation ",
                                column_quasiperiod(column, p).last_violation, ")"));
    }
    rec.add(cat("column ", c, " denominator (1-x)(1-x^16)"), Claim::conjecture, r.settled, detail);
    if (c == 2) {
      const bool match = r.settled && std::equal(r.numerator.begin(), r.numerator.end(),
                                                 reference::kColumnTwoNumerator.begin(),
                                                 reference::kColumnTwoNumerator.end());
      rec.add("column 2 numerator equals the tabulated degree-17 polynomial", Claim::conjecture, match);
    }
  }
}

// -------------------------------------------------------- permutation-lines

void permutation_lines_suite(const SuiteOptions& opt, Recorder& rec) {
  constexpr std::uint64_t kHorizon = 50;
  const SGTable spiral = sg_spiral(opt.cells);
  const SGTable quadrant = sg_quadrant(opt.diagonals);
  for (const SGTable* t : {&spiral, &quadrant}) {
    const DuplicateReport d = duplicate_scan(*t);
    std::string detail = cat(d.lines_checked, " lines, ", d.duplicate_pairs, " duplicates");
    if (!d.examples.empty()) {
      const auto& e = d.examples.front();
      detail += cat(", e.g. value ", e.value, " on ", line_kind_name(e.kind), " ", e.key);
    }
    rec.add(cat(board_name(t->kind()), ": no repeated value on any line"), Claim::proven, d.ok(), detail);
  }

  {
    std::uint64_t short_lines = 0;
    std::int64_t worst = std::numeric_limits<std::int64_t>::max();
    for (LineKind kind : {LineKind::row, LineKind::column}) {
      for (std::int64_t key = 0; key < 20; ++key) {
        const CoverageReport r = line_permutation_report(quadrant, {kind, key}, kHorizon);
        short_lines += static_cast<std::uint64_t>(!r.covers_horizon || r.duplicates != 0);
        worst = std::min(worst, r.coverage);
      }
    }
    rec.add("quadrant rows and columns 0..19 contain every value 0..50", Claim::proven, short_lines == 0,
            cat("least coverage ", worst, ", ", short_lines, " short lines"));
  }

  for (LineKind kind : {LineKind::row, LineKind::column, LineKind::diagonal, LineKind::antidiagonal}) {
    const CoverageReport r = line_permutation_report(spiral, {kind, 0}, kHorizon);
    rec.add(cat("spiral ", line_kind_name(kind), " through the origin covers 0..50"), Claim::conjecture,
            r.covers_horizon && r.duplicates == 0,
            cat(r.length, " cells, values 0..", r.coverage, " present, ", r.duplicates, " duplicates"));
  }
  {
    // Antidiagonals are finite, so only the diagonals c - r = -19 .. 19 are checked.
    std::uint64_t short_lines = 0;
    for (std::int64_t key = -19; key < 20; ++key) {
      const CoverageReport r = line_permutation_report(quadrant, {LineKind::diagonal, key}, kHorizon);
      short_lines += static_cast<std::uint64_t>(!r.covers_horizon || r.duplicates != 0);
    }
    rec.add("quadrant diagonals c - r = -19..19 cover 0..50", Claim::conjecture, short_lines == 0,
            cat(short_lines, " short lines"));
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"numeration", numeration_suite},
      {"word", word_suite},
      {"xymp", xymp_suite},
      {"spiral-queens", spiral_queens_suite},
      {"quadrant-queens", quadrant_queens_suite},
      {"sg-zeros", sg_zeros_suite},
      {"bounds", bounds_suite},
      {"quasiperiod", quasiperiod_suite},
      {"permutation-lines", permutation_lines_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

std::optional<std::vector<Check>> run_suite(std::string_view name, const SuiteOptions& options,
                                            const CheckSink& sink) {
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) {
      Recorder rec(sink);
      fn(options, rec);
      return rec.take();
    }
  }
  return std::nullopt;
}

bool suite_passed(const std::vector<Check>& checks, bool strict) noexcept {
  return std::all_of(checks.begin(), checks.end(), [strict](const Check& c) {
    return c.passed || (!strict && c.claim != Claim::proven);
  });
}

std::string claim_name(Claim claim) {
  switch (claim) {
    case Claim::proven: return "theorem";
    case Claim::conjecture: return "conjecture";
    case Claim::erratum: return "erratum";
  }
  return "theorem";
}

}  // namespace tribq::cli
