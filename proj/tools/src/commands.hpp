#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tribq::cli {

enum class Format { bfile, csv, pgm };

struct SeqRequest {
  std::string name;
  std::uint64_t count = 0;
  Format format = Format::bfile;
  std::optional<std::uint64_t> offset;
  bool numeric = false;
};

struct SgRequest {
  std::string board;
  std::uint64_t cells = 0;
  std::uint64_t diagonals = 0;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  Format format = Format::csv;
  std::uint32_t max_value = 255;
};

[[nodiscard]] const std::vector<std::string>& sequence_names();

// Each returns an exit code; messages for the user go to err.
int cmd_seq(const SeqRequest& req, std::ostream& out, std::ostream& err);
int cmd_sg(const SgRequest& req, std::ostream& out, std::ostream& err);
int cmd_plot_data(const std::string& board, std::uint64_t count, std::ostream& out);
int cmd_bench(bool quick, std::ostream& out);

}  // namespace tribq::cli
