#pragma once

// Data behind each reproduced figure: one table per curve plus a gnuplot
// script that draws them.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chipnoise/material_db.hpp"
#include "chipnoise_cli/table.hpp"

namespace chipnoise::cli {

struct Curve {
  std::string name;   // file stem
  std::string title;  // legend entry; empty for side tables that are not plotted
  Table table;
  int x_column = 1;   // 1-based, for the plot script
  int y_column = 2;
};

struct Figure {
  std::string id;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Curve> curves;
};

const std::vector<std::string>& figure_ids();

/// Throws std::invalid_argument for an unknown id.
Figure build_figure(std::string_view id, const MaterialDatabase& db);

/// Writes <name>.csv for every curve and <id>.gp; returns the written paths.
/// Throws IoError when a file cannot be written.
std::vector<std::filesystem::path> write_figure(const Figure& fig, const std::filesystem::path& dir);

}  // namespace chipnoise::cli
