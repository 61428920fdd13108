#include "tribq/word.hpp"

#include <stdexcept>

#include "tribq/bits.hpp"
#include "tribq/numeration.hpp"

namespace tribq {

Letter letter_from_char(char ch) {
  if (ch < 'a' || ch > 'c') {
    throw std::invalid_argument(std::string("not a letter of {a,b,c}: '") + ch + "'");
  }
  return static_cast<Letter>(ch - 'a');
}

Morphism::Morphism(std::string_view image_a, std::string_view image_b, std::string_view image_c)
    : images_{Word(image_a), Word(image_b), Word(image_c)} {
  for (const Word& w : images_) {
    if (w.empty()) {
      throw std::invalid_argument("morphism images must be nonempty");
    }
    for (char ch : w) {
      (void)letter_from_char(ch);
    }
  }
}

Word Morphism::apply(std::string_view w) const {
  Word out;
  out.reserve(w.size() * 2);
  for (char ch : w) {
    out += images_[index_of(letter_from_char(ch))];
  }
  return out;
}

Word Morphism::apply_power(std::string_view w, unsigned k) const {
  Word cur(w);
  for (unsigned i = 0; i < k; ++i) {
    cur = apply(cur);
  }
  return cur;
}

Morphism Morphism::after(const Morphism& inner) const {
  return {apply(inner.image(Letter::a)), apply(inner.image(Letter::b)),
          apply(inner.image(Letter::c))};
}

Morphism Morphism::identity() { return {"a", "b", "c"}; }

const Morphism& tribonacci_morphism() {
  static const Morphism m{"ab", "ac", "a"};
  return m;
}

const Morphism& theme_morphism() {
  static const Morphism m{"cabaaba", "cababa", "caba"};
  return m;
}

const Morphism& tau_prime() {
  static const Morphism m{"ba", "ca", "a"};
  return m;
}

const Morphism& tau_double_prime() {
  static const Morphism m{"acab", "aab", "ab"};
  return m;
}

const Morphism& tau_cubed() {
  static const Morphism m = tribonacci_morphism().after(tribonacci_morphism().after(tribonacci_morphism()));
  return m;
}

FixedPointStream::FixedPointStream(Morphism m, Letter start)
    : morphism_(std::move(m)), start_(start) {
  const Word& img = morphism_.image(start_);
  if (img.size() < 2 || img.front() != to_char(start_)) {
    throw std::invalid_argument("morphism is not prolongable on the start letter");
  }
  tail_ = img.substr(1);
}

void FixedPointStream::reset() {
  stack_.clear();
  level_ = 0;
  started_ = false;
}

Letter FixedPointStream::next() {
  if (!started_) {
    started_ = true;
    stack_.push_back({kTail, 0, 0});
    return start_;
  }
  for (;;) {
    if (stack_.empty()) {
      ++level_;
      stack_.push_back({kTail, 0, level_});
    }
    Frame& top = stack_.back();
    const Word& w = source_word(top.source);
    if (top.pos == w.size()) {
      stack_.pop_back();
      continue;
    }
    const auto letter = static_cast<Letter>(w[top.pos++] - 'a');
    if (top.depth == 0) {
      return letter;
    }
    const std::uint32_t depth = top.depth - 1;
    stack_.push_back({static_cast<std::uint8_t>(letter), 0, depth});
  }
}

WordStream::WordStream(FixedPointStream body, std::optional<Letter> first)
    : body_(std::move(body)), first_(first), first_pending_(first.has_value()) {}

WordStream WordStream::tribonacci() {
  return WordStream(FixedPointStream(tribonacci_morphism(), Letter::a));
}

WordStream WordStream::theme() {
  return WordStream(FixedPointStream(tribonacci_morphism(), Letter::a), Letter::c);
}

WordStream WordStream::theme_fixed_point() {
  return WordStream(FixedPointStream(theme_morphism(), Letter::c));
}

Letter WordStream::next() {
  if (first_pending_) {
    first_pending_ = false;
    return *first_;
  }
  return body_.next();
}

void WordStream::reset() {
  body_.reset();
  first_pending_ = first_.has_value();
}

Word word_prefix(WordStream stream, std::size_t n) {
  stream.reset();
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(to_char(stream.next()));
  }
  return out;
}

Word trib_block(unsigned n) { return tribonacci_morphism().apply_power("a", n); }

Letter letter_at(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("letter_at: the Tribonacci word is 1-indexed");
  }
  const TribRepr repr = canonical_repr(n - 1);
  const std::string& bits = repr.bits();
  std::size_t ones = 0;
  for (auto it = bits.rbegin(); it != bits.rend() && *it == '1'; ++it) {
    ++ones;
  }
  return static_cast<Letter>(ones);
}

namespace {

// [e_1 .. e_{i-k}]_T for a representation of length i (0 when i <= k).
std::uint64_t eval_dropping(const TribRepr& e, std::size_t k) {
  return e.size() > k ? eval_repr_u64(e.prefix(e.size() - k)) : 0;
}

// e_{i-k} (1-based from the left), 0 when that position does not exist.
std::uint64_t digit_from_right(const TribRepr& e, std::size_t k) {
  return e.size() > k ? static_cast<std::uint64_t>(e.digit(e.size() - 1 - k)) : 0;
}

}  // namespace

LetterCounts count_letters(std::uint64_t n) {
  const TribRepr e = canonical_repr(n);
  return {eval_dropping(e, 1) + digit_from_right(e, 0),
          eval_dropping(e, 2) + digit_from_right(e, 1),
          eval_dropping(e, 3) + digit_from_right(e, 2)};
}

LetterCounts count_letters_shifted(std::uint64_t n) {
  LetterCounts out;
  if (n >= 1) {
    out.a = eval_dropping(canonical_repr(n - 1), 1) + 1;
  }
  if (n >= 2) {
    out.b = eval_dropping(canonical_repr(n - 2), 2) + 1;
  }
  if (n >= 4) {
    out.c = eval_dropping(canonical_repr(n - 4), 3) + 1;
  }
  return out;
}

AbcIndex abc_closed(std::uint64_t n) {
  if (n == 0) {
    return {};
  }
  const TribRepr e = canonical_repr(n - 1);
  return {n, eval_repr_u64(e.append("0")) + 1, eval_repr_u64(e.append("01")) + 1,
          eval_repr_u64(e.append("011")) + 1};
}

std::vector<AbcIndex> abc_mex(std::uint64_t count) {
  std::vector<AbcIndex> rows;
  rows.reserve(count + 1);
  rows.push_back({});
  MexSet positions;  // {A_i, B_i, C_i}
  MexSet gaps;       // {B_i - A_i, C_i - B_i}
  positions.insert(0);
  gaps.insert(0);
  for (std::uint64_t n = 1; n <= count; ++n) {
    AbcIndex r{n, 0, 0, 0};
    r.a = positions.mex();
    r.b = r.a + gaps.mex();
    r.c = r.a + r.b + n;
    positions.insert(r.a);
    positions.insert(r.b);
    positions.insert(r.c);
    gaps.insert(r.b - r.a);
    gaps.insert(r.c - r.b);
    rows.push_back(r);
  }
  return rows;
}

std::vector<AbcIndex> abc_scan(std::uint64_t count) {
  std::vector<AbcIndex> rows(count + 1);
  for (std::uint64_t n = 0; n <= count; ++n) {
    rows[n].n = n;
  }
  WordStream t = WordStream::tribonacci();
  std::array<std::uint64_t, 3> seen{0, 0, 0};
  for (std::uint64_t pos = 1; seen[2] < count; ++pos) {
    const std::size_t l = index_of(t.next());
    if (++seen[l] > count) {
      continue;
    }
    AbcIndex& r = rows[seen[l]];
    (l == 0 ? r.a : l == 1 ? r.b : r.c) = pos;
  }
  return rows;
}

}  // namespace tribq
