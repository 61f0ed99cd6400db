#include "table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace schwinger::cli {

std::size_t Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw std::invalid_argument("no column named '" + name + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* i = std::get_if<long long>(&cell)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(cell);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_cell(row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table& table,
                const std::map<std::string, std::string>& config,
                const std::string& version, const std::string& timestamp,
                std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"]["config"] = config;
  doc["meta"]["version"] = version;
  doc["meta"]["timestamp"] = timestamp;
  doc["data"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json item;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              if (std::isfinite(v)) {
                item[table.columns[c]] = v;
              } else {
                item[table.columns[c]] = nullptr;
              }
            } else {
              item[table.columns[c]] = v;
            }
          },
          row[c]);
    }
    doc["data"].push_back(std::move(item));
  }
  out << std::setw(2) << doc << '\n';
}

namespace {

double as_number(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&cell)) {
    return static_cast<double>(*i);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#e377c2", "#8c564b", "#17becf"};

} // namespace

void write_svg(const Table& table, const std::string& title, std::ostream& out) {
  const std::size_t xi = table.column_index(table.plot_x);
  const std::size_t yi = table.column_index(table.plot_y);
  const bool has_series =
      std::find(table.columns.begin(), table.columns.end(), "series") !=
      table.columns.end();
  const std::size_t si = has_series ? table.column_index("series") : 0;

  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  for (const auto& row : table.rows) {
    const std::string name = has_series ? format_cell(row[si]) : table.plot_y;
    double y = as_number(row[yi]);
    if (table.plot_log_y) {
      y = y > 0.0 ? std::log10(y) : std::numeric_limits<double>::quiet_NaN();
    }
    const double x = as_number(row[xi]);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      continue;
    }
    if (!curves.count(name)) {
      order.push_back(name);
    }
    curves[name].emplace_back(x, y);
  }
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const auto& [name, pts] : curves) {
    for (const auto& [x, y] : pts) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) {
    x0 -= 0.5;
    x1 += 0.5;
  }
  if (!(y1 > y0)) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  constexpr double W = 720, H = 480, L = 70, R = 160, T = 40, B = 60;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title
      << "</text>\n";
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R
      << "\" height=\"" << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4.0;
    const double yv = y0 + (y1 - y0) * k / 4.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 18
        << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
    out << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4
        << "\" text-anchor=\"end\">" << num(yv) << "</text>\n";
  }
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15
      << "\" text-anchor=\"middle\">" << table.plot_x << "</text>\n";
  out << "<text x=\"18\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (T + H - B) / 2
      << ")\">" << (table.plot_log_y ? "log10 " : "") << table.plot_y
      << "</text>\n";
  for (std::size_t c = 0; c < order.size(); ++c) {
    const char* colour = kPalette[c % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" points=\"";
    for (const auto& [x, y] : curves[order[c]]) {
      out << px(x) << ',' << py(y) << ' ';
    }
    out << "\"/>\n";
    const double ly = T + 16.0 * (c + 1);
    out << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << W - R + 30 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << colour
        << "\"/>\n";
    out << "<text x=\"" << W - R + 35 << "\" y=\"" << ly << "\">" << order[c]
        << "</text>\n";
  }
  out << "</svg>\n";
}

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      parts.push_back(item);
    }
    return parts;
  };
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV input");
  }
  t.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto parts = split(line);
    if (parts.size() != t.columns.size()) {
      throw std::invalid_argument("CSV row width differs from header");
    }
    std::vector<Cell> row;
    for (const auto& p : parts) {
      char* end = nullptr;
      const double v = std::strtod(p.c_str(), &end);
      if (!p.empty() && end == p.c_str() + p.size()) {
        row.emplace_back(v);
      } else {
        row.emplace_back(p);
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace schwinger::cli
