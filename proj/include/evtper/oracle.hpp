// Independent ground-truth engines: adaptive quadrature of the exact
// fading average and a Rao-Blackwellized Monte Carlo estimator, plus the
// numeric inverse coding gain for the threshold baselines.
#pragma once

#include <cstdint>
#include <string>

#include "evtper/fading.hpp"
#include "evtper/modulation.hpp"
#include "evtper/quadrature.hpp"

namespace evtper {

// Which AWGN PER goes under the averaging integral.
enum class PerModel {
  Exact,   // 1-(1-ber)^N
  Gumbel,  // EVT approximation
};

struct McResult {
  double mean;          // in [0,1]
  double std_error;     // sample std / sqrt(draws)
  long draws;
  std::uint64_t seed;
  std::string rng;      // generator identification, for reproducibility notes
};

// Average PER over the fading distribution by adaptive quadrature, to
// absolute tolerance tol (>= 1e-12). Throws ConvergenceError (carrying the
// best estimate) when the evaluation budget runs out.
QuadResult avg_per_quadrature(const ModulationScheme& scheme, int n_bits,
                              const FadingChannel& ch, PerModel per_model,
                              double tol, long max_evals = 1000000);

// Rao-Blackwellized Monte Carlo: draws SNRs from the fading distribution
// and averages the exact conditional PER (no per-bit sampling). The same
// seed gives bit-identical results regardless of worker count.
McResult avg_per_montecarlo(const ModulationScheme& scheme, int n_bits,
                            const FadingChannel& ch, long draws,
                            std::uint64_t seed);

// Inverse coding gain: integral of the exact AWGN PER over all SNR.
QuadResult omega0_numeric(const ModulationScheme& scheme, int n_bits, double tol,
                          long max_evals = 1000000);

}  // namespace evtper
