#include "tribq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace tribq {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

}  // namespace

std::uint64_t shell_of(std::uint64_t n) { return (isqrt(n) + 1) / 2; }

Edge edge_of(std::uint64_t n) {
  if (n == 0) {
    return Edge::center;
  }
  const std::uint64_t k = shell_of(n);
  if (n <= 4 * k * k - 2 * k) {
    return Edge::right;
  }
  if (n <= 4 * k * k) {
    return Edge::top;
  }
  if (n <= 4 * k * k + 2 * k) {
    return Edge::left;
  }
  return Edge::bottom;
}

SpiralCoord spiral_to_xy(std::uint64_t n) {
  if (n == 0) {
    return {};
  }
  const std::uint64_t k = shell_of(n);
  const auto sk = static_cast<std::int64_t>(k);
  switch (edge_of(n)) {
    case Edge::right: {
      const auto t = static_cast<std::int64_t>(n - (2 * k - 1) * (2 * k - 1));
      return {sk - 1 - t, sk};
    }
    case Edge::top: {
      const auto t = static_cast<std::int64_t>(n - (4 * k * k - 2 * k + 1));
      return {-sk, sk - 1 - t};
    }
    case Edge::left: {
      const auto t = static_cast<std::int64_t>(n - (4 * k * k + 1));
      return {-sk + 1 + t, -sk};
    }
    case Edge::bottom:
    case Edge::center:
      break;
  }
  const auto t = static_cast<std::int64_t>(n - (4 * k * k + 2 * k + 1));
  return {sk, -sk + 1 + t};
}

std::uint64_t xy_to_spiral(SpiralCoord p) {
  const auto k = static_cast<std::uint64_t>(std::max(std::llabs(p.x), std::llabs(p.y)));
  if (k == 0) {
    return 0;
  }
  const auto sk = static_cast<std::int64_t>(k);
  if (p.y == sk && p.x < sk) {
    return (2 * k - 1) * (2 * k - 1) + static_cast<std::uint64_t>(sk - 1 - p.x);
  }
  if (p.x == -sk && p.y < sk) {
    return 4 * k * k - 2 * k + 1 + static_cast<std::uint64_t>(sk - 1 - p.y);
  }
  if (p.y == -sk && p.x > -sk) {
    return 4 * k * k + 1 + static_cast<std::uint64_t>(p.x + sk - 1);
  }
  return 4 * k * k + 2 * k + 1 + static_cast<std::uint64_t>(p.y + sk - 1);
}

QuadCoord quad_coord(std::uint64_t n) {
  // largest s with s(s+1)/2 <= n
  std::uint64_t s = (isqrt(8 * n + 1) - 1) / 2;
  while (s * (s + 1) / 2 > n) {
    --s;
  }
  while ((s + 1) * (s + 2) / 2 <= n) {
    ++s;
  }
  const std::uint64_t c = n - s * (s + 1) / 2;
  return {s - c, c};
}

}  // namespace tribq
