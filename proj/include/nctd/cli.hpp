#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nctd::cli {

enum ExitCode : int {
  kSuccess = 0,   // yes, Ok, or artifact written
  kNo = 1,        // no, or the map does not verify
  kUsage = 2,     // bad arguments or malformed input
  kResource = 3,  // a search or size cap was hit
  kInternal = 4,  // a certificate failed its own re-verification
};

struct RunReport {
  std::string command;
  std::string variant;
  std::string strategy;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> concepts;
  std::optional<int> cover;
  std::optional<int> treedepth;
  std::optional<int> kernel;
  std::optional<int> k;
  std::string result;
  std::optional<int> value;
  std::string certificate;  // output path, "stdout", or empty
  std::optional<bool> verified;
  double seconds = 0.0;

  // Fixed field order; "key: value" lines, or "key=value" when porcelain.
  // Wall-clock time is left out so that output is reproducible.
  void print(std::ostream& out, bool porcelain) const;
};

struct Outcome {
  int exit_code = kSuccess;
  RunReport report;
};

// Parses `args` (without the program name) and runs one subcommand. The
// report and any artifact without --out go to `out`; diagnostics and the
// elapsed time go to `err`.
Outcome run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nctd::cli
