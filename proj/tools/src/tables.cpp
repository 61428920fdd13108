#include <algorithm>
#include <new>
#include <ostream>

#include "commands.hpp"
#include "tribq/cli.hpp"
#include "tribq/grundy.hpp"

namespace tribq::cli {
namespace {

// P2 grayscale; cells outside the computed extent are written as 0.
template <class At>
void write_pgm(std::ostream& out, std::uint64_t width, std::uint64_t height, std::uint32_t max_value,
               At at) {
  out << "P2\n" << width << ' ' << height << '\n' << max_value << '\n';
  for (std::uint64_t r = 0; r < height; ++r) {
    for (std::uint64_t c = 0; c < width; ++c) {
      out << (c == 0 ? "" : " ") << std::min<std::uint64_t>(at(r, c), max_value);
    }
    out << '\n';
  }
}

void write_matrix_header(std::ostream& out, std::uint64_t cols) {
  for (std::uint64_t c = 0; c < cols; ++c) {
    out << (c == 0 ? "c" : ",c") << c;
  }
  out << '\n';
}

void write_spiral(const SGTable& t, const SgRequest& req, std::ostream& out) {
  switch (req.format) {
    case Format::csv:
      out << "cell,x,y,value\n";
      for (std::uint64_t n = 0; n < t.size(); ++n) {
        const SpiralCoord p = spiral_to_xy(n);
        out << n << ',' << p.x << ',' << p.y << ',' << t.at_cell(n) << '\n';
      }
      break;
    case Format::bfile:
      for (std::uint64_t n = 0; n < t.size(); ++n) {
        out << n << ' ' << t.at_cell(n) << '\n';
      }
      break;
    case Format::pgm: {
      // Complete shells only; image row i is x = i - k, column j is y = j - k.
      std::uint64_t k = 0;
      while (cells_through_shell(k + 1) <= t.size()) {
        ++k;
      }
      const std::uint64_t side = 2 * k + 1;
      const auto shift = static_cast<std::int64_t>(k);
      write_pgm(out, side, side, req.max_value, [&](std::uint64_t r, std::uint64_t c) {
        return t.at(SpiralCoord{static_cast<std::int64_t>(r) - shift, static_cast<std::int64_t>(c) - shift});
      });
      break;
    }
  }
}

void write_grid(const SGTable& t, const SgRequest& req, std::ostream& out) {
  const bool quadrant = t.kind() == BoardKind::quadrant;
  const std::uint64_t rows = t.rows();
  const std::uint64_t cols = quadrant ? t.rows() : t.cols();
  switch (req.format) {
    case Format::csv:
      write_matrix_header(out, cols);
      for (std::uint64_t r = 0; r < rows; ++r) {
        const std::uint64_t width = quadrant ? rows - r : cols;
        for (std::uint64_t c = 0; c < width; ++c) {
          out << (c == 0 ? "" : ",") << t.at(r, c);
        }
        out << '\n';
      }
      break;
    case Format::bfile:
      for (std::uint64_t n = 0; n < t.size(); ++n) {
        out << n << ' ' << t.at_cell(n) << '\n';
      }
      break;
    case Format::pgm:
      write_pgm(out, cols, rows, req.max_value, [&](std::uint64_t r, std::uint64_t c) -> std::uint64_t {
        return t.contains(r, c) ? t.at(r, c) : 0;
      });
      break;
  }
}

}  // namespace

int cmd_sg(const SgRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.board == "spiral") {
      if (req.cells == 0) {
        err << "sg spiral needs --cells >= 1\n";
        return kUsage;
      }
      write_spiral(sg_spiral(req.cells), req, out);
    } else if (req.board == "quadrant") {
      if (req.diagonals == 0) {
        err << "sg quadrant needs --diagonals >= 1\n";
        return kUsage;
      }
      write_grid(sg_quadrant(req.diagonals), req, out);
    } else {
      if (req.rows == 0 || req.cols == 0) {
        err << "sg wythoff needs --rows >= 1 and --cols >= 1\n";
        return kUsage;
      }
      write_grid(sg_wythoff(req.rows, req.cols), req, out);
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "; last completed extent " << e.completed_extent() << '\n';
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  }
  return kOk;
}

}  // namespace tribq::cli
