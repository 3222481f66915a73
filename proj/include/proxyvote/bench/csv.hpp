#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxyvote::bench {

struct CsvRow {
  std::size_t line = 0;  // 1-based, header is line 1
  std::vector<std::string> fields;
};

/// Splits one record. Double-quoted fields may contain commas and "" escapes.
/// Throws ParseError on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no);

/// Reads a whole file, checking the header against `header` and the field
/// count of every row. Blank lines are skipped; a trailing '\r' is dropped.
std::vector<CsvRow> read_csv(std::istream& in, std::span<const std::string_view> header);

double parse_double(const std::string& field, std::size_t line_no);
long long parse_integer(const std::string& field, std::size_t line_no);

}  // namespace proxyvote::bench
