#include "ineqcli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace ineqcli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

}  // namespace

bool parse_number(const std::string& cell, double& out) {
  const std::string s = trim(cell);
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::vector<std::string> split_record(const std::string& line,
                                      std::size_t line_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw CsvError(at_line(line_number) + "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

DataColumn read_column(std::istream& in, const std::string& column) {
  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(in, line)) throw CsvError("input is empty (no header row)");
  ++line_number;
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  const std::vector<std::string> header = split_record(line, line_number);

  std::size_t index = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == column) {
      index = i;
      break;
    }
  }
  if (index == header.size()) {
    throw CsvError("column '" + column + "' not found in header");
  }

  DataColumn out;
  out.name = column;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_record(line, line_number);
    if (fields.size() != header.size()) {
      std::ostringstream os;
      os << at_line(line_number) << "expected " << header.size()
         << " fields, found " << fields.size();
      throw CsvError(os.str());
    }
    double v = 0.0;
    if (!parse_number(fields[index], v)) {
      ++out.skipped;
      continue;
    }
    if (v < 0.0) {
      throw CsvError(at_line(line_number) + "negative value '" +
                     trim(fields[index]) + "' in column '" + column + "'");
    }
    out.values.push_back(v);
  }
  if (out.values.size() < 2) {
    throw CsvError("column '" + column + "' has fewer than 2 usable values");
  }
  if (std::none_of(out.values.begin(), out.values.end(),
                   [](double v) { return v > 0.0; })) {
    throw CsvError("column '" + column + "' has no positive values");
  }
  return out;
}

DataColumn read_column_file(const std::string& path, const std::string& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return read_column(in, column);
}

}  // namespace ineqcli
