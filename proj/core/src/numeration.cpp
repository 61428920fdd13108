#include "tribq/numeration.hpp"

#include <array>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace tribq {
namespace {

constexpr auto kTribU64 = [] {
  // index i holds T_{i-3}
  std::array<std::uint64_t, kMaxTribonacciU64 + 4> t{};
  t[0] = 0;
  t[1] = 0;
  t[2] = 1;
  for (std::size_t i = 3; i < t.size(); ++i) {
    t[i] = t[i - 1] + t[i - 2] + t[i - 3];
  }
  return t;
}();

static_assert(kTribU64[kMaxTribonacciU64 + 3] >
              kTribU64[kMaxTribonacciU64 + 2]);  // no wraparound at the top

class TribNumberTable {
 public:
  TribNumberTable() : values_{0, 0, 1} {}

  BigUint get(int n) {
    const auto i = static_cast<std::size_t>(n + 3);
    {
      std::shared_lock lock(mutex_);
      if (i < values_.size()) {
        return values_[i];
      }
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= i) {
      const std::size_t k = values_.size();
      values_.push_back(values_[k - 1] + values_[k - 2] + values_[k - 3]);
    }
    return values_[i];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigUint> values_;
};

TribNumberTable& table() {
  static TribNumberTable t;
  return t;
}

}  // namespace

TribRepr::TribRepr(std::string_view bits) : bits_(bits) {
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("Tribonacci representation must be binary, got '" +
                                  std::string(bits) + "'");
    }
  }
}

bool TribRepr::is_canonical() const noexcept {
  if (!bits_.empty() && bits_.front() == '0') {
    return false;
  }
  return bits_.find("111") == std::string::npos;
}

TribRepr TribRepr::prefix(std::size_t len) const {
  TribRepr r;
  r.bits_ = bits_.substr(0, len);
  return r;
}

TribRepr TribRepr::append(std::string_view suffix) const {
  return TribRepr(bits_ + std::string(suffix));
}

TribRepr TribRepr::padded(std::size_t width) const {
  TribRepr r = *this;
  if (r.bits_.size() < width) {
    r.bits_.insert(0, width - r.bits_.size(), '0');
  }
  return r;
}

BigUint tribonacci(int n) {
  if (n < -3) {
    throw std::out_of_range("tribonacci: index must be >= -3, got " + std::to_string(n));
  }
  if (n <= kMaxTribonacciU64) {
    return BigUint(kTribU64[static_cast<std::size_t>(n + 3)]);
  }
  return table().get(n);
}

std::uint64_t tribonacci_u64(int n) {
  if (n < -3 || n > kMaxTribonacciU64) {
    throw std::out_of_range("tribonacci_u64: index out of range: " + std::to_string(n));
  }
  return kTribU64[static_cast<std::size_t>(n + 3)];
}

BigUint eval_repr(const TribRepr& e) {
  BigUint sum = 0;
  const auto len = static_cast<int>(e.size());
  for (int j = 0; j < len; ++j) {
    if (e.bits()[static_cast<std::size_t>(j)] == '1') {
      sum += tribonacci(len - 1 - j);
    }
  }
  return sum;
}

std::uint64_t eval_repr_u64(const TribRepr& e) {
  std::uint64_t sum = 0;
  const auto len = static_cast<int>(e.size());
  for (int j = 0; j < len; ++j) {
    if (e.bits()[static_cast<std::size_t>(j)] != '1') {
      continue;
    }
    const int k = len - 1 - j;
    if (k > kMaxTribonacciU64) {
      throw std::overflow_error("eval_repr_u64: value exceeds 64 bits");
    }
    const std::uint64_t t = kTribU64[static_cast<std::size_t>(k + 3)];
    if (sum > std::numeric_limits<std::uint64_t>::max() - t) {
      throw std::overflow_error("eval_repr_u64: value exceeds 64 bits");
    }
    sum += t;
  }
  return sum;
}

TribRepr canonical_repr(std::uint64_t n) {
  if (n == 0) {
    return {};
  }
  int k = 0;
  while (k < kMaxTribonacciU64 && tribonacci_u64(k + 1) <= n) {
    ++k;
  }
  std::string bits;
  bits.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = k; j >= 0; --j) {
    const std::uint64_t t = tribonacci_u64(j);
    if (t <= n) {
      bits.push_back('1');
      n -= t;
    } else {
      bits.push_back('0');
    }
  }
  return TribRepr(bits);
}

TribRepr canonical_repr(const BigUint& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return canonical_repr(static_cast<std::uint64_t>(n));
  }
  int k = kMaxTribonacciU64;
  while (tribonacci(k + 1) <= n) {
    ++k;
  }
  BigUint rest = n;
  std::string bits;
  for (int j = k; j >= 0; --j) {
    BigUint t = tribonacci(j);
    if (t <= rest) {
      bits.push_back('1');
      rest -= t;
    } else {
      bits.push_back('0');
    }
  }
  return TribRepr(bits);
}

std::vector<TribRepr> normalize_trace(const TribRepr& e) {
  std::vector<TribRepr> trace{e};
  std::string s = e.bits();
  for (;;) {
    if (s.starts_with("111")) {
      s.insert(s.begin(), '0');
    }
    const auto pos = s.find("0111");
    if (pos == std::string::npos) {
      break;
    }
    s.replace(pos, 4, "1000");
    trace.emplace_back(s);
  }
  return trace;
}

TribRepr normalize(const TribRepr& e) {
  std::string s = normalize_trace(e).back().bits();
  const auto first_one = s.find('1');
  return TribRepr(first_one == std::string::npos ? std::string_view{}
                                                  : std::string_view(s).substr(first_one));
}

std::vector<TribRepr> enumerate_reprs(unsigned m) {
  if (m > 36) {
    throw std::length_error("enumerate_reprs: U_m too large for m = " + std::to_string(m));
  }
  const std::uint64_t count = tribonacci_u64(static_cast<int>(m));
  std::vector<TribRepr> out;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    out.push_back(canonical_repr(v).padded(m));
  }
  return out;
}

}  // namespace tribq
