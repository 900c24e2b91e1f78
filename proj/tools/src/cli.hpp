#pragma once

// Command-line front end of hankel-spectra. Exit codes: 0 success,
// 1 verification failure, 2 configuration error, 3 numerical failure.

#include <iosfwd>
#include <optional>
#include <string>

namespace hankel::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericalError = 3 };

enum class Command { kernel, verify, spectrum, density, blocks };
enum class Format { csv, json };

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct RunConfig {
  Command command = Command::kernel;
  std::optional<int> ell;
  std::optional<double> p;
  std::optional<std::size_t> size;
  std::optional<Grid> grid;
  std::optional<std::string> method;
  std::optional<std::string> suite;
  std::optional<double> tol;  // unset: each check keeps its default threshold (1e-8 for kernels)
  Format format = Format::csv;
  std::optional<std::string> out;
};

/// Parses argv and runs one command. Output goes to --out (atomically) or
/// `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli
