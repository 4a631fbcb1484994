// Average PER over Nakagami-m block fading: the closed-form EVT result,
// its m=1/2/3 specializations, and the generic integer-m evaluation via
// derivatives of the Gumbel Laplace transform.
#pragma once

#include "evtper/awgn.hpp"
#include "evtper/modulation.hpp"

namespace evtper {

struct FadingChannel {
  // Nakagami fading parameter, >= 0.5; m = 1 is Rayleigh.
  double m;
  // Average linear SNR, > 0.
  double mean_snr;

  FadingChannel(double m_param, double mean_snr_linear);
};

// Provenance tag for average-PER values.
enum class AvgPerMethod {
  ClosedFormEvt,
  QuadratureOracle,
  MonteCarloOracle,
  BaselineSeries,
  BaselineThresholdNumeric,
  BaselineThresholdLiu,
  BaselineThresholdWu,
  BaselineChernoff,
};

// Gamma PDF of the instantaneous SNR under Nakagami-m fading. At snr = 0:
// 0 for m > 1, 1/mean_snr for m = 1, +inf for m < 1 (the integrable
// density singularity).
double nakagami_pdf(const FadingChannel& ch, double snr);

// order-th derivative of h(s) = exp(-location*s) * Gamma(1 + scale*s) / s,
// the Laplace-domain kernel of the Gumbel-averaged PER. Computed by the
// Leibniz rule over h = exp(u)/s with u-derivatives expressed through
// polygamma, exact to machine precision for any supported order.
// Requires s > 0 and 0 <= order <= 15.
double gumbel_laplace_derivative(double location, double scale, double s, int order);

struct AvgPerResult {
  double value;
  AvgPerMethod method;
};

// EVT average PER. Integer m in [1,16] evaluates the closed form (m <= 3)
// or the generic derivative recursion; non-integer m falls back to
// quadrature of the Gumbel integrand and tags the result accordingly.
AvgPerResult avg_per_evt_detail(const ModulationScheme& scheme, int n_bits,
                                const FadingChannel& ch);
double avg_per_evt(const ModulationScheme& scheme, int n_bits, const FadingChannel& ch);

// Dedicated closed forms for m = 1, 2, 3 and the generic integer-m
// recursion, exposed separately so they can referee each other.
double avg_per_evt_closed_form(const ModulationScheme& scheme, int n_bits,
                               const FadingChannel& ch);
double avg_per_evt_generic(const ModulationScheme& scheme, int n_bits,
                           const FadingChannel& ch);

}  // namespace evtper
