#include "evtper/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "evtper/baselines.hpp"
#include "evtper/fading.hpp"
#include "evtper/oracle.hpp"
#include "evtper/parallel.hpp"
#include "evtper/version.hpp"

namespace evtper {
namespace {

std::string format_g(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

std::string config_echo(const RunConfig& cfg, bool sweep_fields) {
  std::ostringstream line;
  line << "# config: scheme=" << cfg.scheme << " n=" << cfg.n_bits;
  if (sweep_fields) {
    line << " m=" << format_g(cfg.m) << " snr=" << format_g(cfg.snr.start_db) << ':'
         << format_g(cfg.snr.stop_db) << ':' << format_g(cfg.snr.step_db) << " methods=";
    for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
      line << (i == 0 ? "" : ",") << cfg.methods[i];
    }
  }
  line << " tol=" << format_g(cfg.tol);
  if (sweep_fields) line << " draws=" << cfg.draws << " seed=" << cfg.seed;
  return line.str();
}

void require_rayleigh_method(const RunConfig& cfg, const std::string& method) {
  if (cfg.m != 1.0) {
    throw std::domain_error("method '" + method + "' applies to Rayleigh fading only (m=1)");
  }
}

struct MethodPlan {
  std::string token;
  std::string provenance;
  // (point index, mean SNR in dB) -> average PER
  std::function<double(long, double)> eval;
};

MethodPlan build_method_plan(const std::string& token, const ModulationScheme& scheme,
                             const RunConfig& cfg) {
  if (token == "evt") {
    const bool closed = cfg.m == std::floor(cfg.m) && cfg.m >= 1.0 && cfg.m <= 16.0;
    return {token, closed ? "closed-form-evt" : "evt-gumbel-quadrature",
            [scheme, &cfg](long, double snr_db) {
              return avg_per_evt(scheme, cfg.n_bits, FadingChannel(cfg.m, db_to_linear(snr_db)));
            }};
  }
  if (token == "quad") {
    return {token, "adaptive-gauss-kronrod tol=" + format_g(cfg.tol),
            [scheme, &cfg](long, double snr_db) {
              return avg_per_quadrature(scheme, cfg.n_bits,
                                        FadingChannel(cfg.m, db_to_linear(snr_db)),
                                        PerModel::Exact, cfg.tol, cfg.max_evals)
                  .value;
            }};
  }
  if (token == "mc") {
    return {token,
            "splitmix64+box-muller+marsaglia-tsang draws=" + std::to_string(cfg.draws) +
                " point-seed=seed+index",
            [scheme, &cfg](long index, double snr_db) {
              return avg_per_montecarlo(scheme, cfg.n_bits,
                                        FadingChannel(cfg.m, db_to_linear(snr_db)), cfg.draws,
                                        cfg.seed + static_cast<std::uint64_t>(index))
                  .mean;
            }};
  }
  if (token == "series") {
    if (scheme.form != BerForm::Exponential) {
      throw std::domain_error("method 'series' requires an exponential-BER scheme");
    }
    if (cfg.n_bits > 64) {
      throw std::domain_error("method 'series' is unstable past N=64; use quad");
    }
    require_rayleigh_method(cfg, token);
    return {token, "binomial-series",
            [scheme, &cfg](long, double snr_db) {
              return avg_per_exact_series(scheme, cfg.n_bits,
                                          FadingChannel(1.0, db_to_linear(snr_db)));
            }};
  }
  if (token == "threshold-numeric") {
    require_rayleigh_method(cfg, token);
    const double omega0 =
        omega0_numeric(scheme, cfg.n_bits, std::max(cfg.tol, 1e-10), cfg.max_evals).value;
    return {token, "threshold-bound omega0=" + format_cell(omega0) + " (numeric)",
            [omega0](long, double snr_db) {
              return avg_per_threshold_bound(omega0, db_to_linear(snr_db));
            }};
  }
  if (token == "threshold-liu" || token == "threshold-wu") {
    require_rayleigh_method(cfg, token);
    const Omega0Model model =
        token == "threshold-liu" ? liu_analytic(scheme) : wu_fitted(scheme);
    const double omega0 = omega0_model(model, cfg.n_bits);
    return {token,
            "threshold-bound omega0=" + format_cell(omega0) + " (k1=" + format_g(model.k1) +
                " k2=" + format_g(model.k2) + ", natural log)",
            [omega0](long, double snr_db) {
              return avg_per_threshold_bound(omega0, db_to_linear(snr_db));
            }};
  }
  if (token == "chernoff") {
    if (scheme.form != BerForm::QFunction) {
      throw std::domain_error("method 'chernoff' requires a Q-function-BER scheme");
    }
    require_rayleigh_method(cfg, token);
    return {token, "chernoff-substituted " + std::string(cfg.n_bits <= 64 ? "series" : "quadrature"),
            [scheme, &cfg](long, double snr_db) {
              return avg_per_chernoff(scheme, cfg.n_bits,
                                      FadingChannel(1.0, db_to_linear(snr_db)));
            }};
  }
  throw std::invalid_argument("unknown method '" + token + "'");
}

std::vector<std::string> standard_head(const RunConfig& cfg, const char* command,
                                       const std::vector<MethodPlan>& plans) {
  std::vector<std::string> head;
  head.push_back(std::string("# evtper ") + kVersion + " " + command);
  head.push_back(config_echo(cfg, true));
  std::string provenance = "# provenance:";
  for (const MethodPlan& plan : plans) {
    provenance += " " + plan.token + "=[" + plan.provenance + "]";
  }
  head.push_back(provenance);
  return head;
}

// Evaluates every plan at every grid point; rows come back in grid order
// regardless of the worker count.
std::vector<std::vector<double>> evaluate_grid(const std::vector<double>& grid_db,
                                               const std::vector<MethodPlan>& plans) {
  std::vector<std::vector<double>> table(grid_db.size());
  parallel_for(static_cast<long>(grid_db.size()), [&](long i) {
    std::vector<double> row;
    row.reserve(plans.size() + 1);
    row.push_back(grid_db[static_cast<std::size_t>(i)]);
    for (const MethodPlan& plan : plans) {
      row.push_back(plan.eval(i, grid_db[static_cast<std::size_t>(i)]));
    }
    table[static_cast<std::size_t>(i)] = std::move(row);
  });
  return table;
}

}  // namespace

PerCurve compute_curve(const RunConfig& cfg) {
  if (cfg.methods.empty()) throw std::invalid_argument("curve: at least one method required");
  const ModulationScheme scheme = parse_scheme(cfg.scheme);
  std::vector<MethodPlan> plans;
  plans.reserve(cfg.methods.size());
  for (const std::string& token : cfg.methods) {
    plans.push_back(build_method_plan(token, scheme, cfg));
  }

  PerCurve curve;
  curve.head_comments = standard_head(cfg, "curve", plans);
  curve.columns.push_back("snr_db");
  for (const MethodPlan& plan : plans) curve.columns.push_back("per_" + plan.token);
  curve.rows = evaluate_grid(snr_grid_db(cfg.snr), plans);
  return curve;
}

PerCurve compute_compare(const RunConfig& cfg) {
  const ModulationScheme scheme = parse_scheme(cfg.scheme);
  bool has_oracle = false;
  std::vector<MethodPlan> approximations;
  for (const std::string& token : cfg.methods) {
    if (token == "quad") {
      has_oracle = true;
      continue;
    }
    approximations.push_back(build_method_plan(token, scheme, cfg));
  }
  if (!has_oracle) {
    throw std::invalid_argument("compare: methods must include the 'quad' oracle");
  }
  if (approximations.empty()) {
    throw std::invalid_argument("compare: need at least one approximation besides 'quad'");
  }
  const MethodPlan oracle = build_method_plan("quad", scheme, cfg);

  std::vector<MethodPlan> all;
  all.push_back(oracle);
  for (const MethodPlan& plan : approximations) all.push_back(plan);

  const std::vector<double> grid = snr_grid_db(cfg.snr);
  const std::vector<std::vector<double>> table = evaluate_grid(grid, all);

  PerCurve curve;
  curve.head_comments = standard_head(cfg, "compare", all);
  curve.columns.push_back("snr_db");
  for (const MethodPlan& plan : approximations) {
    curve.columns.push_back("abs_err_" + plan.token);
  }
  curve.rows.resize(table.size());
  std::vector<double> max_err(approximations.size(), 0.0);
  std::vector<double> sum_err(approximations.size(), 0.0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::vector<double>& row = table[i];
    std::vector<double> out_row;
    out_row.reserve(approximations.size() + 1);
    out_row.push_back(row[0]);
    for (std::size_t j = 0; j < approximations.size(); ++j) {
      const double err = std::abs(row[j + 2] - row[1]);
      out_row.push_back(err);
      max_err[j] = std::max(max_err[j], err);
      sum_err[j] += err;
    }
    curve.rows[i] = std::move(out_row);
  }
  for (std::size_t j = 0; j < approximations.size(); ++j) {
    curve.tail_comments.push_back(
        "#summary,method=" + approximations[j].token + ",max_abs_err=" +
        format_cell(max_err[j]) + ",mean_abs_err=" +
        format_cell(sum_err[j] / static_cast<double>(table.size())));
  }
  return curve;
}

ConstantsRow compute_constants(const RunConfig& cfg) {
  const ModulationScheme scheme = parse_scheme(cfg.scheme);
  const NormingConstants nc = norming_constants(scheme, cfg.n_bits);
  ConstantsRow row;
  row.scheme = cfg.scheme;
  row.n_bits = cfg.n_bits;
  row.location = nc.location;
  row.scale = nc.scale;
  row.omega0_numeric =
      omega0_numeric(scheme, cfg.n_bits, std::max(cfg.tol, 1e-10), cfg.max_evals).value;
  row.omega0_liu = omega0_model(liu_analytic(scheme), cfg.n_bits);
  try {
    row.omega0_wu = omega0_model(wu_fitted(scheme), cfg.n_bits);
  } catch (const std::invalid_argument&) {
    row.omega0_wu.reset();
  }
  row.comments.push_back(std::string("# evtper ") + kVersion + " constants");
  row.comments.push_back(config_echo(cfg, false));
  if (row.omega0_liu <= 0.0 || (row.omega0_wu && *row.omega0_wu <= 0.0)) {
    row.comments.push_back(
        "# warning: non-positive omega0 from a log-linear model; the fit breaks down at "
        "small N");
  }
  return row;
}

void write_constants_csv(std::ostream& out, const ConstantsRow& row) {
  const auto format10 = [](double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return std::string(buffer);
  };
  for (const std::string& line : row.comments) out << line << '\n';
  out << "scheme,n,a_n,b_n,omega0_numeric,omega0_liu,omega0_wu\n";
  // Custom selectors carry commas; quote the scheme field when they do.
  const std::string scheme_cell = row.scheme.find(',') == std::string::npos
                                      ? row.scheme
                                      : '"' + row.scheme + '"';
  out << scheme_cell << ',' << row.n_bits << ',' << format10(row.location) << ','
      << format10(row.scale) << ',' << format10(row.omega0_numeric) << ','
      << format10(row.omega0_liu) << ','
      << (row.omega0_wu ? format10(*row.omega0_wu) : std::string()) << '\n';
}

namespace {

int dispatch(const RunConfig& cfg, const std::string& command, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output_path != "-") {
    file.open(cfg.output_path);
    if (!file) {
      throw std::invalid_argument("cannot open output file '" + cfg.output_path + "'");
    }
    sink = &file;
  }
  if (command == "curve") {
    write_curve_csv(*sink, compute_curve(cfg));
  } else if (command == "compare") {
    write_curve_csv(*sink, compute_compare(cfg));
  } else {
    write_constants_csv(*sink, compute_constants(cfg));
  }
  sink->flush();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string snr_text = "0:30:1";
  std::string methods_text = "evt,quad";

  CLI::App app{"Average packet error rate of uncoded schemes in AWGN and "
               "Nakagami-m block fading (EVT closed forms, quadrature and "
               "Monte Carlo oracles, prior-art baselines)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool full) {
    cmd->add_option("--scheme", cfg.scheme,
                    "fsk | dpsk | bpsk | qam16 | qam64 | custom:<q|exp>,<coeff>,<snr_scale>")
        ->required();
    cmd->add_option("--n", cfg.n_bits, "packet length in bits")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.tol, "quadrature absolute tolerance");
    cmd->add_option("--max-evals", cfg.max_evals, "quadrature evaluation budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.output_path, "output file ('-' = stdout)");
    if (full) {
      cmd->add_option("--m", cfg.m, "Nakagami fading parameter (>= 0.5)");
      cmd->add_option("--snr", snr_text, "start:stop:step sweep in dB");
      cmd->add_option("--methods", methods_text,
                      "comma list from evt,quad,mc,series,threshold-numeric,"
                      "threshold-liu,threshold-wu,chernoff");
      cmd->add_option("--draws", cfg.draws, "Monte Carlo draws")->check(CLI::PositiveNumber);
      cmd->add_option("--seed", cfg.seed, "Monte Carlo seed");
    }
  };

  CLI::App* curve_cmd = app.add_subcommand("curve", "PER vs average SNR, one column per method");
  add_common(curve_cmd, true);
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "absolute error of each method against the quad oracle");
  add_common(compare_cmd, true);
  CLI::App* constants_cmd =
      app.add_subcommand("constants", "norming constants and inverse coding gain");
  add_common(constants_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.snr = parse_snr_range(snr_text);
    cfg.methods.clear();
    std::stringstream ss(methods_text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) cfg.methods.push_back(token);
    }
    const std::string command = curve_cmd->parsed()     ? "curve"
                                : compare_cmd->parsed() ? "compare"
                                                        : "constants";
    return dispatch(cfg, command, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace evtper
