#include "radspec/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "radspec/format.hpp"

namespace radspec::io {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<RecordKind, const char*> kKindNames[] = {
    {RecordKind::Table, "table"},
    {RecordKind::CurveScan, "curve_scan"},
    {RecordKind::Profile, "profile"},
    {RecordKind::TruncationRoots, "truncation_roots"},
    {RecordKind::VerifyReport, "verify_report"},
};

std::string quote_csv(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw IoError("unterminated quote in CSV line: " + std::string(line));
  }
  fields.push_back(std::move(cur));
  return fields;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

}  // namespace

std::string to_string(RecordKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) {
      return name;
    }
  }
  return "unknown";
}

RecordKind parse_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (text == name) {
      return k;
    }
  }
  throw IoError("unknown record kind '" + std::string(text) + "'");
}

void OutputRecord::add_metadata(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void OutputRecord::add_metadata(std::string key, double value) {
  metadata.emplace_back(std::move(key), format_number(value));
}

std::string cell_text(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) {
    return format_number(*v);
  }
  return std::get<std::string>(cell);
}

Cell parse_cell(std::string_view text) {
  if (auto v = parse_number(text)) {
    return *v;
  }
  return std::string(text);
}

std::string to_csv(const OutputRecord& record) {
  std::string out = "# kind: " + to_string(record.kind) + "\n";
  for (const auto& [key, value] : record.metadata) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    out += (c ? "," : "") + quote_csv(record.columns[c]);
  }
  out += "\n";
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += (c ? "," : "") + quote_csv(cell_text(row[c]));
    }
    out += "\n";
  }
  return out;
}

OutputRecord parse_csv(std::string_view text) {
  OutputRecord record;
  bool have_kind = false;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.front() == '#') {
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos || line.size() < 2) {
        throw IoError("malformed metadata line: " + std::string(line));
      }
      const std::string key(line.substr(2, colon - 2));
      const std::string value(line.substr(colon + 2));
      if (!have_kind && key == "kind") {
        record.kind = parse_kind(value);
        have_kind = true;
      } else {
        record.metadata.emplace_back(key, value);
      }
      continue;
    }
    if (!have_header) {
      record.columns = split_csv_line(line);
      have_header = true;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& field : split_csv_line(line)) {
      row.push_back(parse_cell(field));
    }
    if (row.size() != record.columns.size()) {
      throw IoError("row has " + std::to_string(row.size()) +
                    " fields, header has " +
                    std::to_string(record.columns.size()));
    }
    record.rows.push_back(std::move(row));
  }
  if (!have_kind || !have_header) {
    throw IoError("CSV record is missing its kind line or header");
  }
  return record;
}

std::string to_json(const OutputRecord& record) {
  Json j;
  j["kind"] = to_string(record.kind);
  Json meta = Json::object();
  for (const auto& [key, value] : record.metadata) {
    meta[key] = value;
  }
  j["metadata"] = std::move(meta);
  j["columns"] = record.columns;
  Json rows = Json::array();
  for (const auto& row : record.rows) {
    Json r = Json::array();
    for (const auto& cell : row) {
      r.push_back(cell_text(cell));
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

OutputRecord parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed JSON record: ") + e.what());
  }
  OutputRecord record;
  try {
    record.kind = parse_kind(j.at("kind").get<std::string>());
    for (const auto& [key, value] : j.at("metadata").items()) {
      record.metadata.emplace_back(key, value.get<std::string>());
    }
    record.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& cell : r) {
        row.push_back(parse_cell(cell.get<std::string>()));
      }
      record.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("JSON record has the wrong shape: ") + e.what());
  }
  return record;
}

void write_csv(const OutputRecord& record, const std::filesystem::path& path) {
  write_text(to_csv(record), path);
}

void write_json(const OutputRecord& record, const std::filesystem::path& path) {
  write_text(to_json(record), path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace radspec::io
