// Command-line front end: curve / compare / constants subcommands emitting
// CSV. The compute_* functions back the subcommands and are exposed for
// direct testing.
#pragma once

#include <iosfwd>
#include <optional>

#include "evtper/curve.hpp"

namespace evtper {

// One row per SNR point, one per_<method> column per requested method.
PerCurve compute_curve(const RunConfig& config);

// Per-point |approx - oracle| against the quadrature oracle (methods must
// include "quad" plus at least one approximation), with '#summary' trailer
// lines carrying max/mean per method.
PerCurve compute_compare(const RunConfig& config);

struct ConstantsRow {
  std::string scheme;
  int n_bits;
  double location;           // a_N
  double scale;              // b_N
  double omega0_numeric;
  double omega0_liu;
  std::optional<double> omega0_wu;  // absent when no fitted constants exist
  std::vector<std::string> comments;
};

ConstantsRow compute_constants(const RunConfig& config);
void write_constants_csv(std::ostream& out, const ConstantsRow& row);

// Exit codes: 0 success, 2 usage/domain error, 3 numerical non-convergence.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evtper
