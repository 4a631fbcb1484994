// Prior-art expressions the EVT approximation is judged against: the exact
// binomial series (Rayleigh, exponential BER), the threshold upper bound
// with its log-linear inverse-coding-gain models, and the Chernoff-based
// substitution for Q-form schemes.
#pragma once

#include "evtper/fading.hpp"
#include "evtper/modulation.hpp"

namespace evtper {

enum class Omega0Source {
  LiuAnalytic,  // k1 = 1/snr_scale, k2 = (euler + ln coeff)/snr_scale
  WuFitted,     // per-scheme fitted constants (16-QAM seeded)
  Numeric,      // direct integration (held in QuadResult, not here)
};

// Log-linear inverse-coding-gain model: omega0 ~ k1 ln N + k2.
struct Omega0Model {
  double k1;
  double k2;
  Omega0Source source;
};

// Analytic constants. For Q-form schemes the Q-function is first replaced
// by the Chernoff exponential (coeff/2, snr_scale/2), matching how the
// log-linear model was originally derived for BPSK.
Omega0Model liu_analytic(const ModulationScheme& scheme);

// Fitted constants; only 16-QAM is seeded. Throws std::invalid_argument
// for schemes without an entry.
Omega0Model wu_fitted(const ModulationScheme& scheme);

// k1 ln N + k2 (natural log). Requires N >= 2. A negative value is
// returned as-is; callers should treat it as a model breakdown at small N.
double omega0_model(const Omega0Model& model, int n_bits);

// Exact Rayleigh average PER for exponential-BER schemes via the binomial
// series. Alternating terms make it unstable for long packets: refuses
// N > 64 with std::domain_error. Requires m = 1.
double avg_per_exact_series(const ModulationScheme& scheme, int n_bits,
                            const FadingChannel& ch);

// Threshold upper bound 1 - exp(-omega0/mean_snr).
double avg_per_threshold_bound(double omega0, double mean_snr);

// Chernoff substitution Q(x) <= exp(-x^2/2)/2 applied to a Q-form scheme.
ModulationScheme chernoff_exp_scheme(const ModulationScheme& scheme);

// Average PER of the Chernoff-substituted scheme in Rayleigh fading, via
// the exact series (N <= 64) or quadrature (N > 64). Requires m = 1.
double avg_per_chernoff(const ModulationScheme& scheme, int n_bits,
                        const FadingChannel& ch);

}  // namespace evtper
