#include "evtper/curve.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace evtper {

std::vector<double> snr_grid_db(const SnrRangeDb& range) {
  if (!(range.step_db > 0.0)) throw std::invalid_argument("snr range: step must be > 0");
  if (!(range.start_db <= range.stop_db)) {
    throw std::invalid_argument("snr range: start must be <= stop");
  }
  const long count =
      static_cast<long>(std::floor((range.stop_db - range.start_db) / range.step_db + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    grid.push_back(range.start_db + static_cast<double>(i) * range.step_db);
  }
  return grid;
}

double db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

SnrRangeDb parse_snr_range(const std::string& text) {
  SnrRangeDb range;
  char trailing = '\0';
  const int matched = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &range.start_db,
                                  &range.stop_db, &range.step_db, &trailing);
  if (matched != 3) {
    throw std::invalid_argument("snr range must be start:stop:step (dB), got '" + text + "'");
  }
  if (!(range.step_db > 0.0) || !(range.start_db <= range.stop_db)) {
    throw std::invalid_argument("snr range needs start <= stop and step > 0, got '" + text +
                                "'");
  }
  return range;
}

std::string format_cell(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_curve_csv(std::ostream& out, const PerCurve& curve) {
  for (const std::string& line : curve.head_comments) out << line << '\n';
  for (std::size_t i = 0; i < curve.columns.size(); ++i) {
    out << (i == 0 ? "" : ",") << curve.columns[i];
  }
  out << '\n';
  for (const std::vector<double>& row : curve.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i == 0 ? "" : ",") << format_cell(row[i]);
    }
    out << '\n';
  }
  for (const std::string& line : curve.tail_comments) out << line << '\n';
}

PerCurve parse_curve_csv(std::istream& in) {
  PerCurve curve;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      (saw_header ? curve.tail_comments : curve.head_comments).push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!saw_header) {
      curve.columns = std::move(cells);
      saw_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (end == c.c_str()) {
        throw std::invalid_argument("parse_curve_csv: bad numeric cell '" + c + "'");
      }
      row.push_back(v);
    }
    if (row.size() != curve.columns.size()) {
      throw std::invalid_argument("parse_curve_csv: row width does not match header");
    }
    curve.rows.push_back(std::move(row));
  }
  if (!saw_header) throw std::invalid_argument("parse_curve_csv: no header row found");
  return curve;
}

}  // namespace evtper
