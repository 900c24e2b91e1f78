#pragma once

// Verification suites run by `hankel-spectra verify`. Each check compares a
// measured deviation against a threshold; the defaults are the acceptance
// thresholds and a --tol value replaces all of them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emit.hpp"

namespace hankel::cli {

struct CheckRecord {
  std::string name;
  std::string anchor;  // the mathematical statement the check exercises
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

enum class Suite { identities, fourier, kernels, operators, spectral };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

std::vector<CheckRecord> run_suite(Suite suite, std::optional<double> tol);

Json to_json(const CheckRecord& r);

}  // namespace hankel::cli
