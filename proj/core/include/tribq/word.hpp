#pragma once

// Words over {a, b, c}, morphisms, lazily generated fixed points, and the
// Tribonacci-word index machinery (letter at n, prefix counts, A/B/C).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tribq {

enum class Letter : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Letter, 3> kLetters{Letter::a, Letter::b, Letter::c};

[[nodiscard]] constexpr char to_char(Letter l) noexcept { return static_cast<char>('a' + static_cast<int>(l)); }
[[nodiscard]] constexpr std::size_t index_of(Letter l) noexcept { return static_cast<std::size_t>(l); }

/// Throws std::invalid_argument for anything outside 'a'..'c'.
[[nodiscard]] Letter letter_from_char(char ch);

/// A finite word, stored as the characters 'a', 'b', 'c'.
using Word = std::string;

/// A morphism on {a,b,c}*, given by the (nonempty) image of each letter.
class Morphism {
 public:
  Morphism(std::string_view image_a, std::string_view image_b, std::string_view image_c);

  [[nodiscard]] const Word& image(Letter l) const noexcept { return images_[index_of(l)]; }
  [[nodiscard]] Word apply(std::string_view w) const;
  [[nodiscard]] Word apply_power(std::string_view w, unsigned k) const;

  /// (*this) o inner: apply inner first, then this.
  [[nodiscard]] Morphism after(const Morphism& inner) const;

  [[nodiscard]] static Morphism identity();

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::array<Word, 3> images_;
};

/// tau: a -> ab, b -> ac, c -> a.
[[nodiscard]] const Morphism& tribonacci_morphism();
/// theta: a -> cabaaba, b -> cababa, c -> caba.
[[nodiscard]] const Morphism& theme_morphism();
/// tau': a -> ba, b -> ca, c -> a.
[[nodiscard]] const Morphism& tau_prime();
/// tau'': a -> acab, b -> aab, c -> ab.
[[nodiscard]] const Morphism& tau_double_prime();
/// alpha = tau^3: a -> abacaba, b -> abacab, c -> abac.
[[nodiscard]] const Morphism& tau_cubed();

/// Lazily generated fixed point of a morphism prolongable on `start`
/// (its image starts with `start` and has length >= 2).
///
/// The fixed point is start . r . m(r) . m^2(r) ... with r the image of
/// `start` minus its first letter; each m^L(r) is expanded depth-first on an
/// explicit stack, so reading n letters costs O(n) time and O(log n) memory.
class FixedPointStream {
 public:
  FixedPointStream(Morphism m, Letter start);

  Letter next();
  void reset();

 private:
  // source 0..2 expands the image of that letter; kTail expands tail_.
  struct Frame {
    std::uint8_t source;
    std::uint32_t pos;
    std::uint32_t depth;
  };
  static constexpr std::uint8_t kTail = 3;

  [[nodiscard]] const Word& source_word(std::uint8_t s) const {
    return s == kTail ? tail_ : morphism_.image(static_cast<Letter>(s));
  }

  Morphism morphism_;
  Letter start_;
  Word tail_;
  std::vector<Frame> stack_;
  std::uint32_t level_ = 0;
  bool started_ = false;
};

/// A restartable letter stream: an optional prepended letter followed by a
/// morphism fixed point.
class WordStream {
 public:
  WordStream(FixedPointStream body, std::optional<Letter> first = std::nullopt);

  /// T = t_1 t_2 ... (1-indexed).
  [[nodiscard]] static WordStream tribonacci();
  /// Theta = c . T = t_0 t_1 t_2 ... (0-indexed, t_0 = c).
  [[nodiscard]] static WordStream theme();
  /// The fixed point of theta on c, generated directly from theta.
  [[nodiscard]] static WordStream theme_fixed_point();

  Letter next();
  void reset();

 private:
  FixedPointStream body_;
  std::optional<Letter> first_;
  bool first_pending_;
};

/// First n letters of the stream, read from a fresh start.
[[nodiscard]] Word word_prefix(WordStream stream, std::size_t n);

/// Theta(x, y, z)-style numeric instance: each letter replaced by a number.
class SubstitutedStream {
 public:
  SubstitutedStream(WordStream letters, std::array<std::int64_t, 3> values)
      : letters_(std::move(letters)), values_(values) {}

  std::int64_t next() { return values_[index_of(letters_.next())]; }

 private:
  WordStream letters_;
  std::array<std::int64_t, 3> values_;
};

/// tau^n(a).
[[nodiscard]] Word trib_block(unsigned n);

/// t_n of the Tribonacci word (n >= 1), read off (n-1)_T: a trailing 0 1^j
/// gives a, b, c for j = 0, 1, 2. Throws std::invalid_argument for n == 0.
[[nodiscard]] Letter letter_at(std::uint64_t n);

struct LetterCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return a + b + c; }
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

/// N_a(n), N_b(n), N_c(n) from (n)_T = e_1..e_i:
/// N_a = [e_1..e_{i-1}] + e_i, N_b = [e_1..e_{i-2}] + e_{i-1},
/// N_c = [e_1..e_{i-3}] + e_{i-2}.
[[nodiscard]] LetterCounts count_letters(std::uint64_t n);

/// The same counts from (n-1)_T, (n-2)_T and (n-4)_T:
/// N_a = [e_1..e_{i-1}] + 1, N_b = [f_1..f_{j-2}] + 1, N_c = [g_1..g_{k-3}] + 1.
/// Each formula applies once its argument is >= 0; smaller n give 0.
[[nodiscard]] LetterCounts count_letters_shifted(std::uint64_t n);

/// Positions of the n-th a, b and c in T; n = 0 gives (0, 0, 0).
struct AbcIndex {
  std::uint64_t n = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  friend bool operator==(const AbcIndex&, const AbcIndex&) = default;
};

/// A_n = [(n-1)_T 0] + 1, B_n = [(n-1)_T 01] + 1, C_n = [(n-1)_T 011] + 1.
[[nodiscard]] AbcIndex abc_closed(std::uint64_t n);

/// Rows n = 0 .. count built from the mex recurrences
///   A_n = mex{A_i, B_i, C_i : i < n},
///   B_n = A_n + mex{B_i - A_i, C_i - B_i : i < n},
///   C_n = A_n + B_n + n.
[[nodiscard]] std::vector<AbcIndex> abc_mex(std::uint64_t count);

/// Rows n = 0 .. count read directly off the streamed word.
[[nodiscard]] std::vector<AbcIndex> abc_scan(std::uint64_t count);

}  // namespace tribq
