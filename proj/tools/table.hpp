#pragma once

// Result tables and their CSV / JSON / SVG renderings.

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace schwinger::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Columns drawn by the SVG writer: x against y, one polyline per series.
  std::string plot_x;
  std::string plot_y;
  bool plot_log_y = false;

  std::size_t column_index(const std::string& name) const;
};

std::string format_cell(const Cell& cell);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table,
                const std::map<std::string, std::string>& config,
                const std::string& version, const std::string& timestamp,
                std::ostream& out);
void write_svg(const Table& table, const std::string& title, std::ostream& out);

// Reads back a table produced by write_csv. All cells are strings except
// those that parse fully as numbers.
Table read_csv(std::istream& in);

} // namespace schwinger::cli
