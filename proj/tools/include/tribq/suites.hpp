#pragma once

// Verification suites behind `tribq verify`. Each suite runs a fixed set of
// checks and streams one Check per finished statement.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tribq::cli {

/// Proven statements decide the exit code. Conjectures and printed
/// inequalities that are known to be false only do so under --strict.
enum class Claim { proven, conjecture, erratum };

struct Check {
  std::string name;
  Claim claim = Claim::proven;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t cells = 100000;      // spiral SG cells
  std::uint64_t diagonals = 2000;    // quadrant SG antidiagonals
  std::uint64_t queens = 4000;       // spiral queens (theorem mapping k <= queens / 4)
  std::uint64_t columns = 32;        // quadrant columns for the quasi-period experiment
  std::uint64_t depth = 5000;        // quasi-period column depth
  std::uint64_t slope_columns = 1000000;
  std::uint64_t horizon = 1000000;   // word / XYMP scan length
};

using CheckSink = std::function<void(const Check&)>;

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs a suite, passing each check to sink as soon as it finishes.
/// Returns nullopt for an unknown suite name.
std::optional<std::vector<Check>> run_suite(std::string_view name, const SuiteOptions& options,
                                            const CheckSink& sink = {});

/// True when every proven check passed, and under strict every check.
[[nodiscard]] bool suite_passed(const std::vector<Check>& checks, bool strict) noexcept;

[[nodiscard]] std::string claim_name(Claim claim);

}  // namespace tribq::cli
