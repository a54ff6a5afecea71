#pragma once

// Suite dispatch for the cpbih command-line front end. Kept separate from
// main.cpp so tests can drive the suites without spawning processes.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpbih/report.hpp"

namespace cpbih::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::optional<double> rho;  ///< suite default when empty
  std::string case_tag;
  std::string branch;  ///< "plus", "minus" or empty (both where it applies)
  std::optional<int> grid;  ///< N x N samples; suite default when empty
  double step = 1e-3;
  std::map<std::string, double> tolerances;
  Format format = Format::Text;
  std::optional<std::uint64_t> seed;
  std::string out;
};

/// Bad configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  ResidualReport report;
  /// Non-empty for the export commands, which emit raw data instead of a report.
  std::optional<std::string> payload;
  int exit_code = 0;  ///< 0 pass, 1 failed checks, 3 internal numeric failure
};

/// Names accepted by the first positional argument.
const std::vector<std::string>& commands();

/// Tolerance names (with defaults) a command understands.
std::map<std::string, double> default_tolerances(const std::string& command);

/// Throws UsageError for unknown commands, cases, branches, tolerance names
/// or non-positive numeric parameters.
void validate(const RunConfig& config);

/// Canonical "key=value;" string of everything that affects the output.
std::string canonical(const RunConfig& config);

/// Validates, runs the suite and fills in report metadata. UsageError escapes;
/// library errors become a diagnostic row and exit code 3.
RunResult run_report(const RunConfig& config);

/// Serialises the report in the requested format (or returns the payload).
std::string render(const RunResult& result, Format format);

Format parse_format(const std::string& name);

/// "NAME=VALUE" -> (NAME, VALUE). Throws UsageError on malformed input.
std::pair<std::string, double> parse_tolerance(const std::string& spec);

}  // namespace cpbih::cli
