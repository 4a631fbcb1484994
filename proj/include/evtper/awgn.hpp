// PER in the AWGN channel: the exact N-bit expression and its Gumbel
// (minimum) asymptotic with scheme-specific norming constants.
#pragma once

#include "evtper/modulation.hpp"

namespace evtper {

// Gumbel location/scale pair in the linear-SNR domain.
struct NormingConstants {
  double location;  // a_N
  double scale;     // b_N, > 0
};

// Exact PER 1-(1-ber)^N, evaluated via expm1/log1p so PER ~ N*ber stays
// accurate for BER below 1e-12.
double per_awgn_exact(const ModulationScheme& scheme, int n_bits, double snr);

// Norming constants for the Gumbel approximation. Preconditions:
// Exponential form needs N*coeff > 1, Q form needs N*coeff > 2 (below
// that the quantile argument leaves the intended upper tail). Throws
// std::domain_error naming the violated threshold.
NormingConstants norming_constants(const ModulationScheme& scheme, int n_bits);

// Gumbel-minimum approximation 1 - exp(-exp(-(snr - location)/scale)).
double per_awgn_gumbel(const ModulationScheme& scheme, int n_bits, double snr);
double per_awgn_gumbel(const NormingConstants& nc, double snr);

}  // namespace evtper
