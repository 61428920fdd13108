#pragma once

// Cell numberings of the two boards.
//
// Spiral board: Z x Z with x pointing South and y pointing East. Cell 0 is
// the origin and the walk moves E, N, W, S with run lengths 1,1,2,2,3,3,...
// Shell k >= 1 holds cells (2k-1)^2 .. 4k(k+1) in four edges of 2k cells:
// right (y = k), top (x = -k), left (y = -k), bottom (x = k).
//
// Quadrant board: N x N numbered along upward antidiagonals,
// index(r, c) = (r+c)(r+c+1)/2 + c.

#include <compare>
#include <cstdint>

namespace tribq {

struct SpiralCoord {
  std::int64_t x = 0;  // South
  std::int64_t y = 0;  // East

  friend auto operator<=>(const SpiralCoord&, const SpiralCoord&) = default;
};

struct QuadCoord {
  std::uint64_t r = 0;
  std::uint64_t c = 0;

  friend auto operator<=>(const QuadCoord&, const QuadCoord&) = default;
};

enum class Edge { center = 0, right = 1, top = 2, left = 3, bottom = 4 };

[[nodiscard]] SpiralCoord spiral_to_xy(std::uint64_t n);
[[nodiscard]] std::uint64_t xy_to_spiral(SpiralCoord p);

/// Shell of cell n (0 for the center).
[[nodiscard]] std::uint64_t shell_of(std::uint64_t n);
/// Edge of cell n; Edge::center for n == 0.
[[nodiscard]] Edge edge_of(std::uint64_t n);

/// Number of cells in shells 0 .. k, i.e. (2k+1)^2.
[[nodiscard]] constexpr std::uint64_t cells_through_shell(std::uint64_t k) noexcept {
  return (2 * k + 1) * (2 * k + 1);
}

/// (x, y) -> (-y, x), the quarter turn that maps every shell to itself.
[[nodiscard]] constexpr SpiralCoord rotate_quarter(SpiralCoord p) noexcept { return {-p.y, p.x}; }

[[nodiscard]] constexpr std::uint64_t quad_index(QuadCoord p) noexcept {
  const std::uint64_t s = p.r + p.c;
  return s * (s + 1) / 2 + p.c;
}

[[nodiscard]] QuadCoord quad_coord(std::uint64_t n);

/// Number of cells on antidiagonals 0 .. d-1.
[[nodiscard]] constexpr std::uint64_t cells_in_antidiagonals(std::uint64_t d) noexcept {
  return d * (d + 1) / 2;
}

}  // namespace tribq
