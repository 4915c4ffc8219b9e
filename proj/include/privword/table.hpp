#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "privword/bigint.hpp"

namespace privword {

enum class OutputFormat { plain, csv, json };

OutputFormat parse_output_format(std::string_view name);

/// Reals are written with 17 significant digits; non-finite values as nan/inf.
std::string format_real(double v);

struct Cell {
  enum class Kind { text, integer, big, real, null };
  Kind kind = Kind::null;
  std::string value;

  static Cell text(std::string s) { return {Kind::text, std::move(s)}; }
  static Cell integer(std::int64_t v) { return {Kind::integer, std::to_string(v)}; }
  /// Arbitrary-precision integer; quoted in JSON so no parser rounds it.
  static Cell big(const BigInt& v) { return {Kind::big, to_decimal(v)}; }
  static Cell real(double v) { return {Kind::real, format_real(v)}; }
  static Cell null() { return {Kind::null, ""}; }
};

/// Rows of named columns, emitted as CSV (header + rows) or as a JSON array
/// of objects with the same keys.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  void add_row(std::vector<Cell> row);

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Minimal RFC 4180 reader for the CSV written above.
std::vector<std::vector<std::string>> read_csv(std::string_view text);

}  // namespace privword
