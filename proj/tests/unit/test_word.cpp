#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "tribq/word.hpp"

using namespace tribq;

TEST_CASE("morphisms") {
  CHECK(tribonacci_morphism().apply("abc") == "abaca");
  CHECK(theme_morphism().image(Letter::a) == "cabaaba");
  CHECK(tau_cubed() == tribonacci_morphism().after(tribonacci_morphism()).after(tribonacci_morphism()));
  CHECK(tau_double_prime() == tribonacci_morphism().after(tau_prime()));
  CHECK(Morphism::identity().apply("cab") == "cab");
  CHECK_THROWS_AS((void)letter_from_char('d'), std::invalid_argument);
}

TEST_CASE("theta identity") {
  for (unsigned k = 0; k <= 7; ++k) {
    CHECK(theme_morphism().apply_power("c", k) + "c" == "c" + tau_cubed().apply_power("c", k));
  }
}

TEST_CASE("streams") {
  const std::string t = oracle::trib_word(200000);
  CHECK(word_prefix(WordStream::tribonacci(), t.size()) == t);
  CHECK(word_prefix(WordStream::theme(), 10) == "c" + t.substr(0, 9));
  CHECK(word_prefix(WordStream::theme_fixed_point(), 100000) == "c" + t.substr(0, 99999));
  WordStream s = WordStream::tribonacci();
  (void)s.next();
  s.reset();
  CHECK(s.next() == Letter::a);
  SubstitutedStream dx(WordStream::theme(), {2, 1, 1});
  for (std::int64_t expect : {1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2}) {
    CHECK(dx.next() == expect);
  }
}

TEST_CASE("letter_at against the literal word") {
  const std::string t = oracle::trib_word(300000);
  for (std::uint64_t n = 1; n <= t.size(); ++n) {
    REQUIRE(to_char(letter_at(n)) == t[n - 1]);
  }
  CHECK_THROWS_AS((void)letter_at(0), std::invalid_argument);
}

TEST_CASE("letter counts against prefix scans") {
  const std::string t = oracle::trib_word(50000);
  LetterCounts seen;
  for (std::uint64_t n = 1; n <= t.size(); ++n) {
    (t[n - 1] == 'a' ? seen.a : t[n - 1] == 'b' ? seen.b : seen.c) += 1;
    REQUIRE(count_letters(n) == seen);
    REQUIRE(count_letters_shifted(n) == seen);
  }
  CHECK(count_letters(0) == LetterCounts{});
}

TEST_CASE("A, B, C positions") {
  CHECK(abc_closed(1) == AbcIndex{1, 1, 2, 4});
  CHECK(abc_closed(5) == AbcIndex{5, 8, 15, 28});
  CHECK(abc_closed(12) == AbcIndex{12, 21, 39, 72});
  const auto mex = abc_mex(20000);
  CHECK(mex[2] == AbcIndex{2, 3, 6, 11});
  CHECK(mex[7] == AbcIndex{7, 12, 22, 41});
  const std::string t = oracle::trib_word(mex.back().c + 1);
  std::array<std::vector<std::uint64_t>, 3> pos;
  for (std::size_t i = 0; i < t.size(); ++i) {
    pos[static_cast<std::size_t>(t[i] - 'a')].push_back(i + 1);
  }
  const auto scan = abc_scan(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(mex[n] == abc_closed(n));
    REQUIRE(scan[n] == mex[n]);
    REQUIRE(mex[n].a == pos[0][n - 1]);
    REQUIRE(mex[n].b == pos[1][n - 1]);
    REQUIRE(mex[n].c == pos[2][n - 1]);
  }
}

TEST_CASE("block structure") {
  for (unsigned n = 3; n <= 18; ++n) {
    CHECK(trib_block(n) == trib_block(n - 1) + trib_block(n - 2) + trib_block(n - 3));
  }
}

TEST_CASE("property: morphism composition") {
  gen::Source src(21);
  const std::array<const Morphism*, 4> ms{&tribonacci_morphism(), &theme_morphism(), &tau_prime(),
                                          &tau_double_prime()};
  for (int i = 0; i < gen::kCases; ++i) {
    const Morphism& f = *ms[src.below(4)];
    const Morphism& g = *ms[src.below(4)];
    const std::string w = src.word(30);
    CHECK(f.after(g).apply(w) == f.apply(g.apply(w)));
    const std::string v = src.word(30);
    CHECK(f.apply(w + v) == f.apply(w) + f.apply(v));
  }
}

TEST_CASE("property: counts add up and letter_at matches counts") {
  gen::Source src(22);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::uint64_t n = 1 + src.skewed(40);
    const LetterCounts now = count_letters(n);
    const LetterCounts before = count_letters(n - 1);
    CHECK(now.total() == n);
    const Letter l = letter_at(n);
    CHECK((l == Letter::a ? now.a - before.a : l == Letter::b ? now.b - before.b : now.c - before.c) == 1);
  }
}
