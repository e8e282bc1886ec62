#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eisen/arith.hpp"
#include "eisen/bigfloat.hpp"
#include "eisen/oracle.hpp"

namespace eisen::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsage = 2,
  kResourceRefusal = 3,
  kVerificationFailure = 4,
};

enum class OutputFormat { text, csv, json };

/// Defaults, overridden by EISEN_* environment variables, overridden by flags.
struct CliConfig {
  std::uint64_t sieve_limit = ArithSieve::kDefaultLimit;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  int precision_bits = static_cast<int>(BigFloat::kDefaultPrecision);
  OutputFormat output_format = OutputFormat::text;
  unsigned threads = 1;
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace eisen::cli
