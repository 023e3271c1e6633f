#pragma once

// Column-ordered result table written as CSV (header with units, RFC 4180
// quoting) or as a JSON array of row objects. Numbers use 9 significant
// digits in both formats so identical runs give identical bytes.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace chipnoise::cli {

enum class Format { csv, json };

using Cell = std::variant<std::monostate, double, std::string>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  /// Appends the columns of `other` side by side (prefixed), padding the
  /// shorter table with empty cells.
  void append_columns(const Table& other, const std::string& prefix);

  void write(std::ostream& out, Format format) const;
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// "%.9g"; non-finite values as "inf", "-inf", "nan".
std::string format_number(double v);

/// Reads a CSV with a header row. Cells that parse fully as numbers become
/// numbers. Throws IoError when the file cannot be read.
Table read_csv(const std::filesystem::path& path);

}  // namespace chipnoise::cli
