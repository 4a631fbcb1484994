// Sweep configuration and the CSV curve artifact: '#' metadata lines, a
// header row, data rows at 17 significant digits (bit-exact round trips),
// and optional '#summary' trailer lines.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evtper {

struct SnrRangeDb {
  double start_db = 0.0;
  double stop_db = 30.0;
  double step_db = 1.0;
};

struct RunConfig {
  std::string scheme = "fsk";
  int n_bits = 256;
  double m = 1.0;
  SnrRangeDb snr;
  std::vector<std::string> methods = {"evt", "quad"};
  double tol = 1e-9;
  long draws = 100000;
  std::uint64_t seed = 12345;
  long max_evals = 1000000;  // quadrature evaluation budget
  std::string output_path = "-";
};

struct PerCurve {
  std::vector<std::string> head_comments;  // '#'-prefixed lines before the header
  std::vector<std::string> columns;        // snr_db, per_<method>, ...
  std::vector<std::vector<double>> rows;   // one entry per SNR point
  std::vector<std::string> tail_comments;  // '#summary' lines, if any
};

// Ascending dB grid start, start+step, ..., stop (inclusive up to fp slack).
std::vector<double> snr_grid_db(const SnrRangeDb& range);

double db_to_linear(double snr_db);

// "start:stop:step" in dB; throws std::invalid_argument on malformed input.
SnrRangeDb parse_snr_range(const std::string& text);

void write_curve_csv(std::ostream& out, const PerCurve& curve);
PerCurve parse_curve_csv(std::istream& in);

// The full-precision decimal rendering used for every data cell.
std::string format_cell(double value);

}  // namespace evtper
