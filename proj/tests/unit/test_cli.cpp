#include <doctest.h>

#include <sstream>

#include "../support/generators.hpp"
#include "tribq/cli.hpp"
#include "tribq/suites.hpp"

using namespace tribq::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> values_of(const std::string& bfile) {
  std::istringstream in(bfile);
  std::vector<std::string> v;
  for (const auto& e : parse_bfile(in)) {
    v.push_back(e.value);
  }
  return v;
}

}  // namespace

TEST_CASE("seq examples") {
  auto r = run({"seq", "queens-spiral-index", "6"});
  CHECK(r.code == kOk);
  CHECK(r.out == "0 0\n1 9\n2 13\n3 17\n4 21\n5 82\n");
  CHECK(values_of(run({"seq", "s-col", "12"}).out) ==
        std::vector<std::string>{"0", "2", "4", "1", "3", "8", "10", "12", "14", "5", "7", "18"});
  CHECK(run({"seq", "xymp-p", "3"}).out == "0 0\n1 3\n2 8\n");
  CHECK(run({"seq", "abc-a", "3"}).out == "1 1\n2 3\n3 5\n");
  CHECK(run({"seq", "abc-c", "2", "--offset", "0"}).out == "0 0\n1 4\n");
  CHECK(run({"seq", "trib-word", "4"}).out == "1 a\n2 b\n3 a\n4 c\n");
  CHECK(run({"seq", "theme", "3", "--numeric"}).out == "0 2\n1 0\n2 1\n");
  CHECK(run({"seq", "wythoff-w", "4", "--format", "csv"}).out == "n,value\n0,0\n1,2\n2,1\n3,5\n");
  CHECK(values_of(run({"seq", "queens-quadrant-index", "6"}).out) ==
        std::vector<std::string>{"0", "7", "13", "23", "32", "96"});
  CHECK(run({"seq", "xymp-x", "0"}).out.empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"seq", "no-such", "3"}).code == kUsage);
  CHECK(run({"seq", "trib-word", "3", "--offset", "0"}).code == kUsage);
  CHECK(run({"seq", "xymp-x", "3", "--format", "pgm"}).code == kUsage);
  CHECK(run({"verify", "no-such"}).code == kUsage);
  CHECK(run({"sg", "hexagon"}).code == kUsage);
  CHECK(run({"sg", "spiral"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("sg output") {
  CHECK(run({"sg", "wythoff", "--rows", "1", "--cols", "1"}).out == "c0\n0\n");
  CHECK(run({"sg", "spiral", "--cells", "1"}).out == "cell,x,y,value\n0,0,0,0\n");
  const auto q = run({"sg", "quadrant", "--diagonals", "9", "--format", "csv"});
  std::istringstream lines(q.out);
  std::string header;
  std::string first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "c0,c1,c2,c3,c4,c5,c6,c7,c8");
  CHECK(first == "0,2,1,5,3,4,9,10,12");
  CHECK(run({"sg", "quadrant", "--diagonals", "2", "--format", "bfile"}).out == "0 0\n1 1\n2 2\n");
  CHECK(run({"sg", "wythoff", "--rows", "2", "--cols", "3", "--format", "pgm", "--max", "1"}).out ==
        "P2\n3 2\n1\n0 1 1\n1 1 0\n");
}

TEST_CASE("plot-data") {
  CHECK(run({"plot-data", "spiral", "5"}).out == "n,x,y\n0,0,0\n1,1,2\n2,-2,1\n3,-1,-2\n4,2,-1\n");
  CHECK(run({"plot-data", "quadrant", "3"}).out == "n,row,col\n0,0,0\n1,2,1\n2,4,2\n");
  CHECK(run({"plot-data", "spiral", "0"}).out == "n,x,y\n");
}

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", "sg-zeros", "--cells", "2000", "--diagonals", "100"});
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("FAIL  [theorem]") == std::string::npos);
  const auto qp = run({"verify", "quasiperiod", "--columns", "12", "--depth", "3000"});
  CHECK(qp.code == kOk);  // conjecture failures are reported only
  CHECK(qp.out.find("FAIL  [conjecture] column 9") != std::string::npos);
  CHECK(run({"verify", "quasiperiod", "--columns", "12", "--depth", "3000", "--strict"}).code == kFailure);
  CHECK(run({"verify", "quasiperiod", "--columns", "8", "--depth", "3000", "--strict"}).code == kOk);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  CHECK_FALSE(run_suite("nope", {}).has_value());
  std::vector<Check> checks{{"a", Claim::conjecture, false, ""}, {"b", Claim::proven, true, ""}};
  CHECK(suite_passed(checks, false));
  CHECK_FALSE(suite_passed(checks, true));
}

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n\n0 5\n1 -3\n");
  const auto e = parse_bfile(in);
  REQUIRE(e.size() == 2);
  CHECK(e[1] == BfileEntry{1, "-3"});
  std::istringstream bad("0 1 2\n");
  CHECK_THROWS_AS((void)parse_bfile(bad), std::runtime_error);
  std::istringstream short_line("7\n");
  CHECK_THROWS_AS((void)parse_bfile(short_line), std::runtime_error);
}

TEST_CASE("property: b-file round trip") {
  gen::Source src(51);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::uint64_t offset = src.below(3);
    std::vector<std::string> terms;
    for (std::uint64_t v : src.values(40, 1000000000)) {
      terms.push_back(std::to_string(v));
    }
    std::ostringstream out;
    write_bfile(out, offset, terms);
    std::istringstream in(out.str());
    const auto parsed = parse_bfile(in);
    REQUIRE(parsed.size() == terms.size());
    for (std::size_t k = 0; k < parsed.size(); ++k) {
      CHECK(parsed[k] == BfileEntry{offset + k, terms[k]});
    }
  }
}

TEST_CASE("seq output re-parses to the same sequence") {
  for (const char* name : {"xymp-y", "abc-b", "s-col", "wythoff-w", "queens-spiral-index"}) {
    const auto first = run({"seq", name, "200"});
    std::istringstream in(first.out);
    const auto parsed = parse_bfile(in);
    REQUIRE(parsed.size() == 200);
    std::vector<std::string> terms;
    for (const auto& e : parsed) {
      terms.push_back(e.value);
    }
    std::ostringstream again;
    write_bfile(again, parsed.front().index, terms);
    CHECK(again.str() == first.out);
  }
}
