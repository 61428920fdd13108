#pragma once

// Published reference values used as golden data by the verify suites and
// the tests.

#include <array>
#include <cstdint>
#include <string_view>

namespace tribq::reference {

struct XympGoldenRow {
  char label;
  std::uint64_t x, y, m, p;
  std::uint64_t dx, dy, dm, dp;
  std::uint64_t a, b, c;
};

// Rows n = 0 .. 28.
inline constexpr std::array<XympGoldenRow, 29> kXympRows{{
    {'c', 0, 0, 0, 0, 1, 2, 1, 3, 0, 0, 0},
    {'a', 1, 2, 1, 3, 2, 3, 1, 5, 1, 2, 4},
    {'b', 3, 5, 2, 8, 1, 3, 2, 4, 3, 6, 11},
    {'a', 4, 8, 4, 12, 2, 3, 1, 5, 5, 9, 17},
    {'c', 6, 11, 5, 17, 1, 2, 1, 3, 7, 13, 24},
    {'a', 7, 13, 6, 20, 2, 3, 1, 5, 8, 15, 28},
    {'b', 9, 16, 7, 25, 1, 3, 2, 4, 10, 19, 35},
    {'a', 10, 19, 9, 29, 2, 3, 1, 5, 12, 22, 41},
    {'a', 12, 22, 10, 34, 2, 3, 1, 5, 14, 26, 48},
    {'b', 14, 25, 11, 39, 1, 3, 2, 4, 16, 30, 55},
    {'a', 15, 28, 13, 43, 2, 3, 1, 5, 18, 33, 61},
    {'c', 17, 31, 14, 48, 1, 2, 1, 3, 20, 37, 68},
    {'a', 18, 33, 15, 51, 2, 3, 1, 5, 21, 39, 72},
    {'b', 20, 36, 16, 56, 1, 3, 2, 4, 23, 43, 79},
    {'a', 21, 39, 18, 60, 2, 3, 1, 5, 25, 46, 85},
    {'b', 23, 42, 19, 65, 1, 3, 2, 4, 27, 50, 92},
    {'a', 24, 45, 21, 69, 2, 3, 1, 5, 29, 53, 98},
    {'c', 26, 48, 22, 74, 1, 2, 1, 3, 31, 57, 105},
    {'a', 27, 50, 23, 77, 2, 3, 1, 5, 32, 59, 109},
    {'b', 29, 53, 24, 82, 1, 3, 2, 4, 34, 63, 116},
    {'a', 30, 56, 26, 86, 2, 3, 1, 5, 36, 66, 122},
    {'a', 32, 59, 27, 91, 2, 3, 1, 5, 38, 70, 129},
    {'b', 34, 62, 28, 96, 1, 3, 2, 4, 40, 74, 136},
    {'a', 35, 65, 30, 100, 2, 3, 1, 5, 42, 77, 142},
    {'c', 37, 68, 31, 105, 1, 2, 1, 3, 44, 81, 149},
    {'a', 38, 70, 32, 108, 2, 3, 1, 5, 45, 83, 153},
    {'b', 40, 73, 33, 113, 1, 3, 2, 4, 47, 87, 160},
    {'a', 41, 76, 35, 117, 2, 3, 1, 5, 49, 90, 166},
    {'c', 43, 79, 36, 122, 1, 2, 1, 3, 51, 94, 173},
}};

inline constexpr std::array<std::uint64_t, 18> kSpiralQueenCells{
    0, 9, 13, 17, 21, 82, 92, 102, 112, 228, 244, 260, 276, 445, 467, 489, 511, 630};

// Coordinates (x, y) of q_1 .. q_5.
inline constexpr std::array<std::array<std::int64_t, 2>, 5> kSpiralQueenCoords{{
    {1, 2}, {-2, 1}, {-1, -2}, {2, -1}, {3, 5}}};

inline constexpr std::array<std::uint64_t, 6> kQuadrantQueenCells{0, 7, 13, 23, 32, 96};

inline constexpr std::array<std::uint64_t, 22> kQueenRows{
    0, 2, 4, 1, 3, 8, 10, 12, 14, 5, 7, 18, 6, 21, 9, 24, 26, 28, 30, 11, 13, 34};

inline constexpr std::array<std::uint64_t, 22> kWythoffRows{
    0, 2, 1, 5, 7, 3, 10, 4, 13, 15, 6, 18, 20, 8, 23, 9, 26, 28, 11, 31, 12, 34};

// Upper-left triangle of the quadrant table: row r holds columns 0 .. 8-r.
inline constexpr std::array<std::array<int, 9>, 9> kQuadrantCorner{{
    {0, 2, 1, 5, 3, 4, 9, 10, 12},
    {1, 3, 4, 0, 7, 2, 5, 11, -1},
    {2, 0, 5, 1, 8, 6, 4, -1, -1},
    {3, 1, 2, 4, 0, 7, -1, -1, -1},
    {4, 6, 0, 3, 1, -1, -1, -1, -1},
    {5, 7, 8, 6, -1, -1, -1, -1, -1},
    {6, 4, 3, -1, -1, -1, -1, -1, -1},
    {7, 5, -1, -1, -1, -1, -1, -1, -1},
    {8, -1, -1, -1, -1, -1, -1, -1, -1},
}};

// Values along the East and West half-axes of the spiral table, from the
// origin outwards (excluding the origin).
inline constexpr std::array<std::uint32_t, 10> kSpiralEastRay{1, 3, 7, 10, 11, 15, 8, 18, 23, 21};

// Numerator of column 2's generating function over (1-x)(1-x^16).
inline constexpr std::array<std::int64_t, 18> kColumnTwoNumerator{
    1, 3, 1, -3, -2, 8, -5, 3, 1, 5, 1, -3, 1, -2, 8, -3, 0, 2};

inline constexpr std::string_view kNormalizeInput = "1011011101";
inline constexpr std::array<std::string_view, 3> kNormalizeTrace{
    "1011011101", "1011100001", "1100000001"};

// Binet-form and shift-bound extrema.
inline constexpr std::uint64_t kShiftArgmin = 65915;
inline constexpr std::uint64_t kShiftArgmax = 78748;
// Minimum rounded down and maximum rounded up to three decimals.
inline constexpr double kShiftMinRoundedDown = -0.587;
inline constexpr double kShiftMaxRoundedUp = 0.847;

// First n where A_n, B_n, C_n exceed their floor lower bound by one.
inline constexpr std::array<std::uint64_t, 3> kFirstFloorExceptions{12737, 329, 2047};

}  // namespace tribq::reference
