#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_); }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return below(2) == 1; }

  // Binary string of length in [0, max_len].
  std::string bits(std::size_t max_len) {
    std::string s(below(max_len + 1), '0');
    for (char& ch : s) {
      ch = coin() ? '1' : '0';
    }
    return s;
  }

  // Word over {a, b, c} of length in [0, max_len].
  std::string word(std::size_t max_len) {
    std::string s(below(max_len + 1), 'a');
    for (char& ch : s) {
      ch = static_cast<char>('a' + below(3));
    }
    return s;
  }

  // Integer sizes skewed toward small values: uniform over the bit length.
  std::uint64_t skewed(unsigned max_bits) {
    const unsigned b = static_cast<unsigned>(below(max_bits + 1));
    return b == 0 ? 0 : below(std::uint64_t{1} << b);
  }

  std::vector<std::uint64_t> values(std::size_t max_len, std::uint64_t bound) {
    std::vector<std::uint64_t> v(below(max_len + 1));
    for (auto& x : v) {
      x = below(bound);
    }
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kCases = 500;

}  // namespace gen
