#include "proxyvote/bench/csv.hpp"

#include <charconv>
#include <cmath>

#include "proxyvote/errors.hpp"

namespace proxyvote::bench {

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  fields.push_back(std::move(current));
  return fields;
}

std::vector<CsvRow> read_csv(std::istream& in, std::span<const std::string_view> header) {
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line, line_no);
    if (!have_header) {
      if (fields.size() != header.size()) throw ParseError("unexpected header", line_no);
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (fields[c] != header[c]) {
          throw ParseError("unexpected header column '" + fields[c] + "'", line_no);
        }
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    rows.push_back({line_no, std::move(fields)});
  }
  if (!have_header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  return rows;
}

double parse_double(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ParseError("not a number: '" + field + "'", line_no);
  }
  return value;
}

long long parse_integer(const std::string& field, std::size_t line_no) {
  long long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not an integer: '" + field + "'", line_no);
  }
  return value;
}

}  // namespace proxyvote::bench
