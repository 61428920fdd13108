#include "tribq/xymp.hpp"

#include "tribq/bits.hpp"

namespace tribq {

XympTable XympTable::build_mex(std::size_t count) {
  XympTable t;
  if (count == 0) {
    return t;
  }
  t.rows_.reserve(count);
  t.rows_.push_back({});
  MexSet xy;
  MexSet mp;
  xy.insert(0);
  mp.insert(0);
  for (std::uint64_t n = 1; n < count; ++n) {
    XympRow r{n, xy.mex(), 0, mp.mex(), 0};
    r.y = r.x + r.m;
    r.p = r.x + r.y;
    xy.insert(r.x);
    xy.insert(r.y);
    mp.insert(r.m);
    mp.insert(r.p);
    t.rows_.push_back(r);
  }
  return t;
}

std::uint64_t XympTable::column(XympColumn which, std::size_t n) const {
  const XympRow& r = rows_.at(n);
  switch (which) {
    case XympColumn::x:
      return r.x;
    case XympColumn::y:
      return r.y;
    case XympColumn::m:
      return r.m;
    case XympColumn::p:
      return r.p;
  }
  return 0;
}

XympRow row_closed(std::uint64_t n) {
  const AbcIndex abc = abc_closed(n);
  return {n, abc.b - abc.a, abc.c - abc.b, abc.c + abc.a - 2 * abc.b, abc.c - abc.a};
}

Letter label_row(const XympTable& table, std::size_t n) {
  const XympRow& lo = table.at(n);
  const XympRow& hi = table.at(n + 1);
  const std::array<std::uint64_t, 4> d{hi.x - lo.x, hi.y - lo.y, hi.m - lo.m, hi.p - lo.p};
  if (d == std::array<std::uint64_t, 4>{2, 3, 1, 5}) {
    return Letter::a;
  }
  if (d == std::array<std::uint64_t, 4>{1, 3, 2, 4}) {
    return Letter::b;
  }
  if (d == std::array<std::uint64_t, 4>{1, 2, 1, 3}) {
    return Letter::c;
  }
  throw InvariantViolation("XYMP row " + std::to_string(n) + " has difference quadruple (" +
                           std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
                           std::to_string(d[2]) + "," + std::to_string(d[3]) + ")");
}

std::vector<std::int64_t> delta_stream(const XympTable& table, XympColumn which,
                                       std::size_t count) {
  if (count + 1 > table.size()) {
    throw std::out_of_range("delta_stream: table has too few rows");
  }
  std::vector<std::int64_t> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = static_cast<std::int64_t>(table.column(which, n + 1)) -
             static_cast<std::int64_t>(table.column(which, n));
  }
  return out;
}

std::array<std::int64_t, 3> theme_values(XympColumn which) {
  switch (which) {
    case XympColumn::x:
      return {2, 1, 1};
    case XympColumn::y:
      return {3, 3, 2};
    case XympColumn::m:
      return {1, 2, 1};
    case XympColumn::p:
      return {5, 4, 3};
  }
  return {};
}

std::string column_name(XympColumn which) {
  switch (which) {
    case XympColumn::x:
      return "X";
    case XympColumn::y:
      return "Y";
    case XympColumn::m:
      return "M";
    case XympColumn::p:
      return "P";
  }
  return "?";
}

}  // namespace tribq
