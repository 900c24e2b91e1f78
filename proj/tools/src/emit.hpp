#pragma once

// Deterministic CSV/JSON emission and atomic file output.

#include "json.hpp"

#include <string>
#include <vector>

namespace hankel::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Header row plus data rows, comma-separated, '\n' line ends.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> cells);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Pretty JSON with a trailing newline.
std::string dump_json(const Json& j);

/// Writes content to path via a temporary sibling file and rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace hankel::cli
