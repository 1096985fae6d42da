#pragma once

// Row buffer plus the three writers: CSV, JSON and a bare SVG line chart.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace casimir::cli {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;  // echoed as '# key: value'
  std::vector<std::string> columns;                       // name with unit, e.g. a_nm
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;  // warnings, go to stderr and '# note:' lines
  // plot: x column and y columns
  int plot_x = 0;
  std::vector<int> plot_y;
  std::string plot_title;
};

inline std::string fmt_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string fmt_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt_number(*d);
  return std::get<std::string>(c);
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
  for (const auto& n : t.notes) os << "# note: " << n << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt_cell(row[i]);
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) j["meta"][k] = v;
  j["notes"] = t.notes;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      if (const auto* d = std::get_if<double>(&row[i])) {
        // JSON has no nan/inf
        if (std::isfinite(*d)) {
          r[t.columns[i]] = *d;
        } else {
          r[t.columns[i]] = nullptr;
        }
      } else {
        r[t.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    j["rows"].push_back(r);
  }
  os << j.dump(2) << '\n';
}

namespace detail {

inline double cell_value(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::numeric_limits<double>::quiet_NaN();
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

/// Axes, tick labels and one polyline per y column.
inline void write_svg(std::ostream& os, const Table& t) {
  constexpr double W = 640, H = 420, ml = 80, mr = 20, mt = 40, mb = 60;
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& row : t.rows) {
    const double x = detail::cell_value(row[t.plot_x]);
    if (!std::isfinite(x)) continue;
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    for (int c : t.plot_y) {
      const double y = detail::cell_value(row[c]);
      if (!std::isfinite(y)) continue;
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) { x0 -= 1; x1 += 1; }
  if (!(y1 > y0)) { y0 -= 1; y1 += 1; }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << detail::xml_escape(t.plot_title)
     << "</text>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\"" << H - mb
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
     << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    char bx[32], by[32];
    std::snprintf(bx, sizeof bx, "%.4g", xv);
    std::snprintf(by, sizeof by, "%.4g", yv);
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - mb + 16 << "\" text-anchor=\"middle\">" << bx << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << by << "</text>\n";
  }
  os << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">"
     << detail::xml_escape(t.columns[t.plot_x]) << "</text>\n";
  for (std::size_t s = 0; s < t.plot_y.size(); ++s) {
    const int c = t.plot_y[s];
    const char* colour = colours[s % 5];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : t.rows) {
      const double x = detail::cell_value(row[t.plot_x]);
      const double y = detail::cell_value(row[c]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", first ? "" : " ", px(x), py(y));
      os << buf;
      first = false;
    }
    os << "\"/>\n";
    os << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 14 * (s + 1) << "\" fill=\"" << colour << "\">"
       << detail::xml_escape(t.columns[c]) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace casimir::cli
