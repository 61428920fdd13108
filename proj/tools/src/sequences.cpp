#include <functional>
#include <ostream>

#include "commands.hpp"
#include "tribq/cli.hpp"
#include "tribq/greedy.hpp"
#include "tribq/grundy.hpp"
#include "tribq/word.hpp"
#include "tribq/xymp.hpp"

namespace tribq::cli {
namespace {

using Emit = std::function<void(std::uint64_t n, const std::string& value)>;

struct SequenceSpec {
  std::string name;
  std::uint64_t offset;  // index of the first emitted term
  void (*generate)(std::uint64_t first, std::uint64_t count, bool numeric, const Emit& emit);
};

void xymp_terms(XympColumn col, std::uint64_t first, std::uint64_t count, const Emit& emit) {
  const XympTable t = XympTable::build_mex(first + count);
  for (std::uint64_t n = first; n < first + count; ++n) {
    emit(n, std::to_string(t.column(col, n)));
  }
}

void abc_terms(int which, std::uint64_t first, std::uint64_t count, const Emit& emit) {
  if (count == 0) {
    return;
  }
  const auto rows = abc_mex(first + count - 1);
  for (std::uint64_t n = first; n < first + count; ++n) {
    const AbcIndex& r = rows[n];
    emit(n, std::to_string(which == 0 ? r.a : which == 1 ? r.b : r.c));
  }
}

void letter_terms(WordStream stream, std::uint64_t first, std::uint64_t count, bool numeric,
                  const Emit& emit) {
  for (std::uint64_t n = first; n < first + count; ++n) {
    const Letter l = stream.next();
    emit(n, numeric ? std::to_string(index_of(l)) : std::string(1, to_char(l)));
  }
}

template <class Values>
void emit_all(const Values& values, std::uint64_t first, const Emit& emit) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    emit(first + i, std::to_string(values[i]));
  }
}

const std::vector<SequenceSpec>& sequences() {
  static const std::vector<SequenceSpec> specs{
      {"xymp-x", 0, [](auto f, auto c, bool, const Emit& e) { xymp_terms(XympColumn::x, f, c, e); }},
      {"xymp-y", 0, [](auto f, auto c, bool, const Emit& e) { xymp_terms(XympColumn::y, f, c, e); }},
      {"xymp-m", 0, [](auto f, auto c, bool, const Emit& e) { xymp_terms(XympColumn::m, f, c, e); }},
      {"xymp-p", 0, [](auto f, auto c, bool, const Emit& e) { xymp_terms(XympColumn::p, f, c, e); }},
      {"abc-a", 1, [](auto f, auto c, bool, const Emit& e) { abc_terms(0, f, c, e); }},
      {"abc-b", 1, [](auto f, auto c, bool, const Emit& e) { abc_terms(1, f, c, e); }},
      {"abc-c", 1, [](auto f, auto c, bool, const Emit& e) { abc_terms(2, f, c, e); }},
      {"trib-word", 1,
       [](auto f, auto c, bool num, const Emit& e) { letter_terms(WordStream::tribonacci(), f, c, num, e); }},
      {"theme", 0,
       [](auto f, auto c, bool num, const Emit& e) { letter_terms(WordStream::theme(), f, c, num, e); }},
      {"queens-spiral-index", 0,
       [](auto f, auto c, bool, const Emit& e) {
         for (const auto& q : simulate_spiral(c)) {
           e(f + q.ordinal, std::to_string(q.cell));
         }
       }},
      {"queens-quadrant-index", 0,
       [](auto f, auto c, bool, const Emit& e) {
         for (const auto& q : simulate_quadrant(c)) {
           e(f + q.ordinal, std::to_string(q.cell));
         }
       }},
      {"s-col", 0, [](auto f, auto c, bool, const Emit& e) { emit_all(simulate_quadrant_by_columns(c), f, e); }},
      {"wythoff-w", 0, [](auto f, auto c, bool, const Emit& e) { emit_all(wythoff_zero_rows(c), f, e); }},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : sequences()) {
      out.push_back(s.name);
    }
    return out;
  }();
  return names;
}

int cmd_seq(const SeqRequest& req, std::ostream& out, std::ostream& err) {
  const SequenceSpec* spec = nullptr;
  for (const auto& s : sequences()) {
    if (s.name == req.name) {
      spec = &s;
    }
  }
  if (spec == nullptr) {
    err << "unknown sequence: " << req.name << '\n';
    return kUsage;
  }
  if (req.format == Format::pgm) {
    err << "seq supports --format bfile or csv\n";
    return kUsage;
  }
  std::uint64_t first = spec->offset;
  if (req.offset) {
    const bool is_abc = spec->name.rfind("abc-", 0) == 0;
    if (*req.offset != spec->offset && !(is_abc && *req.offset == 0)) {
      err << "sequence " << spec->name << " only supports offset " << spec->offset
          << (is_abc ? " or 0" : "") << '\n';
      return kUsage;
    }
    first = *req.offset;
  }
  if (req.format == Format::csv) {
    out << "n,value\n";
  }
  const char sep = req.format == Format::csv ? ',' : ' ';
  spec->generate(first, req.count, req.numeric, [&](std::uint64_t n, const std::string& value) {
    out << n << sep << value << '\n';
  });
  return kOk;
}

int cmd_plot_data(const std::string& board, std::uint64_t count, std::ostream& out) {
  if (board == "spiral") {
    out << "n,x,y\n";
    if (count > 0) {
      for (const auto& q : simulate_spiral(count)) {
        out << q.ordinal << ',' << q.coord.x << ',' << q.coord.y << '\n';
      }
    }
    return kOk;
  }
  // Quadrant: the queen of column n, as (n, row, col).
  out << "n,row,col\n";
  if (count > 0) {
    const auto rows = simulate_quadrant_by_columns(count);
    for (std::uint64_t c = 0; c < rows.size(); ++c) {
      out << c << ',' << rows[c] << ',' << c << '\n';
    }
  }
  return kOk;
}

}  // namespace tribq::cli
