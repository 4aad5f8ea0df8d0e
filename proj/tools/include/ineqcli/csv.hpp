#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ineqcli {

/// Malformed input file. The message names the 1-based line where parsing
/// stopped.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric column pulled from a CSV file. Cells that are empty or not a
/// number are dropped and counted; negative numbers are rejected.
struct DataColumn {
  std::string name;
  std::vector<double> values;
  std::size_t skipped = 0;
};

/// Splits one CSV record. Handles quoted fields with embedded commas and
/// doubled quotes. Throws CsvError on an unterminated quote.
std::vector<std::string> split_record(const std::string& line,
                                      std::size_t line_number);

/// Reads `column` from a header-first CSV stream. Requires at least two
/// usable values, one of them strictly positive.
DataColumn read_column(std::istream& in, const std::string& column);
DataColumn read_column_file(const std::string& path, const std::string& column);

/// Strict full-string parse of a finite double; false for anything else.
bool parse_number(const std::string& cell, double& out);

}  // namespace ineqcli
