#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "radspec/model.hpp"

namespace radspec::io {

inline constexpr const char* kToolVersion = "1.0.0";

enum class RecordKind { Table, CurveScan, Profile, TruncationRoots, VerifyReport };

std::string to_string(RecordKind kind);
RecordKind parse_kind(std::string_view text);

/// Numbers are rendered with 10 significant digits; text cells hold status
/// words and identifiers.
using Cell = std::variant<double, std::string>;

struct OutputRecord {
  RecordKind kind = RecordKind::Table;
  /// Ordered key/value pairs (parameters, grid, tolerances, tool version).
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_metadata(std::string key, std::string value);
  void add_metadata(std::string key, double value);
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// `#`-prefixed metadata preamble (first line `# kind: <kind>`), a header
/// line of column names, then comma-separated rows. LF line endings.
std::string to_csv(const OutputRecord& record);
OutputRecord parse_csv(std::string_view text);

/// {"kind", "metadata", "columns", "rows"} with fixed key order; every cell
/// is a JSON string so the bytes do not depend on a float printer.
std::string to_json(const OutputRecord& record);
OutputRecord parse_json(std::string_view text);

void write_csv(const OutputRecord& record, const std::filesystem::path& path);
void write_json(const OutputRecord& record, const std::filesystem::path& path);

/// Reads a whole file, surfacing the path on failure.
std::string read_file(const std::filesystem::path& path);

/// A cell rendered the way both formats print it.
std::string cell_text(const Cell& cell);
/// Numeric cells parse to double, everything else stays text.
Cell parse_cell(std::string_view text);

}  // namespace radspec::io
