#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>

#include "commands.hpp"
#include "tribq/cli.hpp"
#include "tribq/greedy.hpp"
#include "tribq/grundy.hpp"
#include "tribq/numeration.hpp"
#include "tribq/word.hpp"
#include "tribq/xymp.hpp"

namespace tribq::cli {

// Wall-clock timings of the main builders; the google-benchmark targets in
// benchmarks/ are the careful measurements.
int cmd_bench(bool quick, std::ostream& out) {
  const std::uint64_t scale = quick ? 10 : 1;
  const auto time = [&](const std::string& label, const std::function<std::size_t()>& run) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t size = run();
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out << std::left << std::setw(40) << label << std::right << std::setw(12) << std::fixed
        << std::setprecision(1) << ms.count() << " ms  (" << size << ")\n";
  };
  time("xymp build_mex", [&] { return XympTable::build_mex(1000000 / scale).size(); });
  time("abc_mex", [&] { return abc_mex(1000000 / scale).size(); });
  time("canonical_repr", [&] {
    std::size_t bits = 0;
    for (std::uint64_t n = 0; n < 1000000 / scale; ++n) {
      bits += canonical_repr(n).size();
    }
    return bits;
  });
  time("simulate_spiral", [&] { return simulate_spiral(4000 / scale).size(); });
  time("simulate_quadrant_by_columns", [&] { return simulate_quadrant_by_columns(1000000 / scale).size(); });
  time("sg_spiral", [&] { return sg_spiral(100000 / scale).size(); });
  time("sg_quadrant", [&] { return sg_quadrant(2000 / scale).size(); });
  time("sg_wythoff", [&] { return sg_wythoff(1000 / scale, 1000 / scale).size(); });
  time("sg_quadrant_columns", [&] { return sg_quadrant_columns(33, 5000 / scale).columns.size(); });
  return kOk;
}

}  // namespace tribq::cli
