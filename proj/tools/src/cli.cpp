#include "tribq/cli.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <new>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tribq/suites.hpp"

namespace tribq::cli {

void write_bfile(std::ostream& out, std::uint64_t offset, const std::vector<std::string>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << offset + i << ' ' << terms[i] << '\n';
  }
}

std::vector<BfileEntry> parse_bfile(std::istream& in) {
  std::vector<BfileEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') {
      continue;
    }
    std::istringstream fields(line);
    BfileEntry e;
    std::string extra;
    if (!(fields >> e.index >> e.value) || (fields >> extra)) {
      throw std::runtime_error("malformed b-file line " + std::to_string(line_no) + ": " + line);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

const std::map<std::string, Format> kFormats{
    {"bfile", Format::bfile}, {"csv", Format::csv}, {"pgm", Format::pgm}};

std::vector<std::string> format_names() {
  std::vector<std::string> names;
  for (const auto& [name, f] : kFormats) {
    names.push_back(name);
  }
  return names;
}

void print_check(std::ostream& out, const Check& c) {
  out << (c.passed ? "PASS" : "FAIL") << "  [" << claim_name(c.claim) << "] " << c.name;
  if (!c.detail.empty()) {
    out << ": " << c.detail;
  }
  out << '\n';
}

int run_verify(const std::string& suite, const SuiteOptions& options, bool strict, std::ostream& out) {
  const auto checks = run_suite(suite, options, [&out](const Check& c) {
    print_check(out, c);
    out.flush();
  });
  const auto count = [&](auto pred) { return std::count_if(checks->begin(), checks->end(), pred); };
  const auto theorem_failures = count([](const Check& c) { return !c.passed && c.claim == Claim::proven; });
  const auto other_failures = count([](const Check& c) { return !c.passed && c.claim != Claim::proven; });
  const bool ok = suite_passed(*checks, strict);
  out << suite << ": " << checks->size() << " checks, " << theorem_failures << " theorem failures, "
      << other_failures << " conjecture/erratum failures" << (strict ? " (strict)" : "") << " -> "
      << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tribonacci numeration, greedy queens and Sprague-Grundy tables", "tribq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tribq 0.1.0");

  std::string format_name;

  SeqRequest seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print the first COUNT terms of a sequence");
  seq_cmd->add_option("name", seq.name, "Sequence name")->required()->check(CLI::IsMember(sequence_names()));
  seq_cmd->add_option("count", seq.count, "Number of terms")->required();
  seq_cmd->add_option("--format", format_name, "bfile or csv")->check(CLI::IsMember({"bfile", "csv"}));
  auto* offset_opt = seq_cmd->add_option("--offset", "Index of the first term (abc-*: 0 adds the zero row)");
  seq_cmd->add_flag("--numeric", seq.numeric, "Letters as 0, 1, 2 instead of a, b, c");

  SgRequest sg;
  auto* sg_cmd = app.add_subcommand("sg", "Print a Sprague-Grundy table");
  sg_cmd->add_option("board", sg.board, "spiral, quadrant or wythoff")
      ->required()
      ->check(CLI::IsMember({"spiral", "quadrant", "wythoff"}));
  sg_cmd->add_option("--cells", sg.cells, "Spiral cells");
  sg_cmd->add_option("--diagonals", sg.diagonals, "Quadrant antidiagonals");
  sg_cmd->add_option("--rows", sg.rows, "Wythoff rows");
  sg_cmd->add_option("--cols", sg.cols, "Wythoff columns");
  sg_cmd->add_option("--format", format_name, "csv, bfile or pgm")->check(CLI::IsMember(format_names()));
  sg_cmd->add_option("--max", sg.max_value, "Clamp value for pgm")->check(CLI::Range(1U, 65535U));

  std::string suite;
  bool strict = false;
  SuiteOptions suite_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--strict", strict, "Conjecture and erratum failures also fail the run");
  verify_cmd->add_option("--cells", suite_options.cells, "Spiral SG cells")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--diagonals", suite_options.diagonals, "Quadrant SG antidiagonals")
      ->check(CLI::Range(9U, 100000U));
  verify_cmd->add_option("--queens", suite_options.queens, "Spiral queens to place")
      ->check(CLI::Range(20U, 10000000U));
  verify_cmd->add_option("--columns", suite_options.columns, "Last quadrant column for quasiperiod")
      ->check(CLI::Range(2U, 4096U));
  verify_cmd->add_option("--depth", suite_options.depth, "Column depth for quasiperiod")
      ->check(CLI::Range(64U, 100000000U));
  verify_cmd->add_option("--slope-columns", suite_options.slope_columns, "Columns for the slope bounds")
      ->check(CLI::Range(22U, 1000000000U));
  verify_cmd->add_option("--horizon", suite_options.horizon, "Terms for the word and XYMP scans")
      ->check(CLI::Range(100000U, 1000000000U));

  std::string plot_board;
  std::uint64_t plot_count = 0;
  auto* plot_cmd = app.add_subcommand("plot-data", "Queen coordinates as CSV");
  plot_cmd->add_option("board", plot_board, "spiral or quadrant")
      ->required()
      ->check(CLI::IsMember({"spiral", "quadrant"}));
  plot_cmd->add_option("count", plot_count, "Number of queens")->required();

  bool quick = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time the main builders");
  bench_cmd->add_flag("--quick", quick, "Run at a tenth of the default sizes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (seq_cmd->parsed()) {
      if (!format_name.empty()) {
        seq.format = kFormats.at(format_name);
      }
      if (offset_opt->count() > 0) {
        seq.offset = offset_opt->as<std::uint64_t>();
      }
      return cmd_seq(seq, out, err);
    }
    if (sg_cmd->parsed()) {
      if (!format_name.empty()) {
        sg.format = kFormats.at(format_name);
      }
      return cmd_sg(sg, out, err);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, suite_options, strict, out);
    }
    if (plot_cmd->parsed()) {
      return cmd_plot_data(plot_board, plot_count, out);
    }
    return cmd_bench(quick, out);
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const CLI::ConversionError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tribq::cli
