#include <doctest.h>

#include <stdexcept>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "tribq/numeration.hpp"

using namespace tribq;

TEST_CASE("tribonacci numbers") {
  CHECK(tribonacci(-3) == 0);
  CHECK(tribonacci(-2) == 0);
  CHECK(tribonacci(-1) == 1);
  CHECK(tribonacci(0) == 1);
  CHECK(tribonacci_u64(19) == 121415);
  CHECK(tribonacci_u64(20) == 223317);
  CHECK_THROWS_AS((void)tribonacci(-4), std::out_of_range);
  const auto t = oracle::tribonacci(kMaxTribonacciU64 + 1);
  for (int n = 0; n <= kMaxTribonacciU64; ++n) {
    CHECK(tribonacci_u64(n) == t[static_cast<std::size_t>(n)]);
  }
  CHECK(tribonacci(100) == tribonacci(99) + tribonacci(98) + tribonacci(97));
}

TEST_CASE("TribRepr basics") {
  CHECK_THROWS_AS(TribRepr("102"), std::invalid_argument);
  CHECK(TribRepr("").is_canonical());
  CHECK(TribRepr("1011").is_canonical());
  CHECK_FALSE(TribRepr("0101").is_canonical());
  CHECK_FALSE(TribRepr("1110").is_canonical());
  CHECK(TribRepr("101").padded(5).bits() == "00101");
  CHECK(TribRepr("10110").prefix(3).bits() == "101");
  CHECK(TribRepr("10").append("01").bits() == "1001");
}

TEST_CASE("canonical representations") {
  CHECK(canonical_repr(std::uint64_t{7}).bits() == "1000");
  CHECK(canonical_repr(std::uint64_t{0}).bits().empty());
  CHECK(canonical_repr(std::uint64_t{10}).bits() == "1011");
  CHECK(eval_repr_u64(TribRepr("111")) == 7);
  for (std::uint64_t n = 0; n < 20000; ++n) {
    const TribRepr e = canonical_repr(n);
    REQUIRE(e.bits() == oracle::greedy_repr(n));
    REQUIRE(eval_repr_u64(e) == n);
  }
  CHECK(canonical_repr(BigUint(123456789)).bits() == canonical_repr(std::uint64_t{123456789}).bits());
}

TEST_CASE("eval_repr beyond 64 bits") {
  const TribRepr big(std::string(90, '1'));
  CHECK_THROWS_AS((void)eval_repr_u64(big), std::overflow_error);
  CHECK(eval_repr(big) > BigUint(std::numeric_limits<std::uint64_t>::max()));
  CHECK(canonical_repr(eval_repr(big)) == normalize(big));
}

TEST_CASE("normalize") {
  const auto trace = normalize_trace(TribRepr("1011011101"));
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].bits() == "1011011101");
  CHECK(trace[1].bits() == "1011100001");
  CHECK(trace[2].bits() == "1100000001");
  CHECK(normalize(TribRepr("1011011101")).bits() == "1100000001");
  CHECK(normalize(TribRepr("111")).bits() == "1000");
  CHECK(normalize(TribRepr("0001")).bits() == "1");
  CHECK(normalize(TribRepr("1011")).bits() == "1011");
}

TEST_CASE("enumerate_reprs") {
  CHECK(enumerate_reprs(0).size() == 1);
  CHECK(enumerate_reprs(3).size() == 7);
  const auto u = enumerate_reprs(10);
  REQUIRE(u.size() == tribonacci_u64(10));
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(u[i].size() == 10);
    CHECK(eval_repr_u64(u[i]) == i);
  }
  CHECK_THROWS_AS((void)enumerate_reprs(37), std::length_error);
}

TEST_CASE("property: normalize is value-preserving, canonical and idempotent") {
  gen::Source src(11);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::string bits = src.bits(40);
    const TribRepr e(bits);
    const TribRepr n = normalize(e);
    CAPTURE(bits);
    CHECK(eval_repr(n) == eval_repr(e));
    CHECK(n.is_canonical());
    CHECK(normalize(n) == n);
    CHECK(canonical_repr(eval_repr(e)) == n);
    for (const auto& step : normalize_trace(e)) {
      CHECK(eval_repr(step) == eval_repr(e));
    }
  }
}

TEST_CASE("property: eval agrees with the literal sum") {
  gen::Source src(12);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::string bits = src.bits(45);
    CHECK(eval_repr_u64(TribRepr(bits)) == oracle::eval(bits));
  }
}

TEST_CASE("property: canonical_repr round trip on random magnitudes") {
  gen::Source src(13);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::uint64_t n = src.skewed(62);
    const TribRepr e = canonical_repr(n);
    CHECK(eval_repr_u64(e) == n);
    CHECK(e.bits() == oracle::greedy_repr(n));
  }
}

TEST_CASE("property: appending a zero preserves equality of values") {
  gen::Source src(14);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::string x = src.bits(20);
    const std::string y = normalize(TribRepr(x)).bits();  // same value, different digits
    CHECK(oracle::eval(x + "0") == oracle::eval(y + "0"));
  }
}
