#include "evtper/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "evtper/oracle.hpp"

namespace evtper {
namespace {

void require_rayleigh(const FadingChannel& ch, const char* where) {
  if (ch.m != 1.0) {
    throw std::domain_error(std::string(where) + ": only Rayleigh fading (m = 1) is supported");
  }
}

}  // namespace

Omega0Model liu_analytic(const ModulationScheme& scheme) {
  double coeff = scheme.coeff;
  double snr_scale = scheme.snr_scale;
  if (scheme.form == BerForm::QFunction) {
    const ModulationScheme substituted = chernoff_exp_scheme(scheme);
    coeff = substituted.coeff;
    snr_scale = substituted.snr_scale;
  }
  return {1.0 / snr_scale, (std::numbers::egamma + std::log(coeff)) / snr_scale,
          Omega0Source::LiuAnalytic};
}

Omega0Model wu_fitted(const ModulationScheme& scheme) {
  if (scheme.name == "qam16") return {2.327, -3.736, Omega0Source::WuFitted};
  throw std::invalid_argument("wu_fitted: no fitted constants for scheme '" + scheme.name +
                              "'");
}

double omega0_model(const Omega0Model& model, int n_bits) {
  if (n_bits < 2) throw std::domain_error("omega0_model: N must be >= 2");
  return model.k1 * std::log(static_cast<double>(n_bits)) + model.k2;
}

double avg_per_exact_series(const ModulationScheme& scheme, int n_bits,
                            const FadingChannel& ch) {
  if (scheme.form != BerForm::Exponential) {
    throw std::domain_error("avg_per_exact_series: scheme must have exponential BER form");
  }
  require_rayleigh(ch, "avg_per_exact_series");
  if (n_bits < 1) throw std::domain_error("avg_per_exact_series: N must be >= 1");
  if (n_bits > 64) {
    throw std::domain_error(
        "avg_per_exact_series: alternating binomial series is numerically unstable "
        "past N = 64 (got N = " + std::to_string(n_bits) + "); use quadrature instead");
  }

  // 1 - sum_n C(N,n) (-1)^n coeff^n / (1 + n snr_scale gbar), Kahan-compensated
  // in extended precision. C(64,32) ~ 1.8e18 is still exact in long double.
  long double sum = 0.0L;
  long double compensation = 0.0L;
  long double binom = 1.0L;
  long double coeff_pow = 1.0L;
  for (int n = 0; n <= n_bits; ++n) {
    const long double denom = 1.0L + static_cast<long double>(n) *
                                         static_cast<long double>(scheme.snr_scale) *
                                         static_cast<long double>(ch.mean_snr);
    const long double sign = n % 2 == 0 ? 1.0L : -1.0L;
    const long double term = sign * binom * coeff_pow / denom;
    const long double y = term - compensation;
    const long double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    binom = binom * static_cast<long double>(n_bits - n) / static_cast<long double>(n + 1);
    coeff_pow *= static_cast<long double>(scheme.coeff);
  }
  return static_cast<double>(1.0L - sum);
}

double avg_per_threshold_bound(double omega0, double mean_snr) {
  if (!(omega0 > 0.0)) throw std::domain_error("avg_per_threshold_bound: omega0 must be > 0");
  if (!(mean_snr > 0.0)) throw std::domain_error("avg_per_threshold_bound: mean SNR must be > 0");
  return -std::expm1(-omega0 / mean_snr);
}

ModulationScheme chernoff_exp_scheme(const ModulationScheme& scheme) {
  if (scheme.form != BerForm::QFunction) {
    throw std::domain_error("chernoff_exp_scheme: scheme must have Q-function BER form");
  }
  return {scheme.name + "+chernoff", BerForm::Exponential, 0.5 * scheme.coeff,
          0.5 * scheme.snr_scale};
}

double avg_per_chernoff(const ModulationScheme& scheme, int n_bits,
                        const FadingChannel& ch) {
  require_rayleigh(ch, "avg_per_chernoff");
  const ModulationScheme substituted = chernoff_exp_scheme(scheme);
  if (n_bits <= 64) return avg_per_exact_series(substituted, n_bits, ch);
  return avg_per_quadrature(substituted, n_bits, ch, PerModel::Exact, 1e-10).value;
}

}  // namespace evtper
