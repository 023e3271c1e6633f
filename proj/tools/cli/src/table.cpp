#include "chipnoise_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "chipnoise/error.hpp"

namespace chipnoise::cli {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return csv_escape(std::get<std::string>(c));
  return {};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("row width does not match the header");
  rows_.push_back(std::move(row));
}

void Table::append_columns(const Table& other, const std::string& prefix) {
  const std::size_t width = columns_.size();
  for (const auto& c : other.columns_) columns_.push_back(prefix + c);
  const std::size_t n = std::max(rows_.size(), other.rows_.size());
  rows_.resize(n, std::vector<Cell>(width));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < other.rows_.size()) {
      rows_[i].insert(rows_[i].end(), other.rows_[i].begin(), other.rows_[i].end());
    } else {
      rows_[i].resize(columns_.size());
    }
  }
}

void Table::write(std::ostream& out, Format format) const {
  if (format == Format::json) {
    write_json(out);
  } else {
    write_csv(out);
  }
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << csv_escape(columns_[i]);
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << "\r\n";
  }
}

void Table::write_json(std::ostream& out) const {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<double>(c)) {
        const double v = std::get<double>(c);
        // Round through the CSV text so both formats carry the same digits.
        obj[columns_[i]] = std::isfinite(v) ? nlohmann::ordered_json(std::strtod(format_number(v).c_str(), nullptr))
                                            : nlohmann::ordered_json(format_number(v));
      } else if (std::holds_alternative<std::string>(c)) {
        obj[columns_[i]] = std::get<std::string>(c);
      } else {
        obj[columns_[i]] = nullptr;
      }
    }
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path.string() + "' is empty");
  Table t(split_csv_line(line));
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    fields.resize(t.columns().size());
    std::vector<Cell> row;
    for (auto& f : fields) {
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (!f.empty() && end == f.c_str() + f.size()) {
        row.emplace_back(v);
      } else if (f.empty()) {
        row.emplace_back(std::monostate{});
      } else {
        row.emplace_back(std::move(f));
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace chipnoise::cli
