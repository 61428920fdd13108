#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it with string streams.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tribq::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

/// args excludes the program name.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One "n value" line per term, n starting at offset.
void write_bfile(std::ostream& out, std::uint64_t offset, const std::vector<std::string>& terms);

struct BfileEntry {
  std::uint64_t index = 0;
  std::string value;

  friend bool operator==(const BfileEntry&, const BfileEntry&) = default;
};

/// Parses "n value" lines; blank lines and lines starting with '#' are
/// skipped. Throws std::runtime_error on a malformed line.
[[nodiscard]] std::vector<BfileEntry> parse_bfile(std::istream& in);

}  // namespace tribq::cli
