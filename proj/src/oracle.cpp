#include "evtper/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "evtper/awgn.hpp"
#include "evtper/parallel.hpp"

namespace evtper {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer: bijective avalanche mix.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() { return mix64(state += kGolden); }

  // Uniform on (0, 1]: never 0, so logs are safe.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }
};

// Substream for block b: the raw state seed + b*kGolden would alias the
// parent stream (kGolden is also the engine increment), so the block index
// goes through the avalanche mix first.
SplitMix64 block_stream(std::uint64_t seed, long block) {
  return SplitMix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(block) + 1)));
}

// Box-Muller standard normal; generates pairs, hands them out one at a time.
struct NormalSampler {
  SplitMix64& rng;
  double cached = 0.0;
  bool has_cached = false;

  double operator()() {
    if (has_cached) {
      has_cached = false;
      return cached;
    }
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached = radius * std::sin(angle);
    has_cached = true;
    return radius * std::cos(angle);
  }
};

// Marsaglia-Tsang gamma variate, shape >= 1.
double gamma_variate_ge1(SplitMix64& rng, NormalSampler& normal, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double gamma_variate(SplitMix64& rng, NormalSampler& normal, double shape) {
  if (shape >= 1.0) return gamma_variate_ge1(rng, normal, shape);
  // Boost for shape < 1: gamma(shape) = gamma(shape+1) * U^{1/shape}.
  const double g = gamma_variate_ge1(rng, normal, shape + 1.0);
  return g * std::pow(rng.next_unit(), 1.0 / shape);
}

// Doubling search for the SNR where the exact PER has decayed past its
// transition; anchors the omega0 integration panels.
double transition_scale(const ModulationScheme& scheme, int n_bits) {
  double snr = 1.0;
  while (snr < 1e12 && per_awgn_exact(scheme, n_bits, snr) > 0.25) snr *= 2.0;
  return snr;
}

}  // namespace

QuadResult avg_per_quadrature(const ModulationScheme& scheme, int n_bits,
                              const FadingChannel& ch, PerModel per_model,
                              double tol, long max_evals) {
  if (!(tol >= 1e-12)) {
    throw std::domain_error("avg_per_quadrature: tol must be >= 1e-12");
  }
  if (per_model == PerModel::Exact) {
    const auto integrand = [&](double snr) {
      return per_awgn_exact(scheme, n_bits, snr) * nakagami_pdf(ch, snr);
    };
    return integrate_semi_infinite(integrand, ch.mean_snr, tol, max_evals);
  }
  const NormingConstants nc = norming_constants(scheme, n_bits);
  const auto integrand = [&](double snr) {
    return per_awgn_gumbel(nc, snr) * nakagami_pdf(ch, snr);
  };
  return integrate_semi_infinite(integrand, ch.mean_snr, tol, max_evals);
}

McResult avg_per_montecarlo(const ModulationScheme& scheme, int n_bits,
                            const FadingChannel& ch, long draws,
                            std::uint64_t seed) {
  if (draws < 1000) {
    throw std::domain_error("avg_per_montecarlo: need at least 1000 draws");
  }
  constexpr long kBlockSize = 8192;
  const long n_blocks = (draws + kBlockSize - 1) / kBlockSize;
  const double shape = ch.m;
  const double scale = ch.mean_snr / ch.m;

  struct BlockSums {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<BlockSums> blocks(static_cast<std::size_t>(n_blocks));

  parallel_for(n_blocks, [&](long block) {
    SplitMix64 rng = block_stream(seed, block);
    NormalSampler normal{rng};
    const long begin = block * kBlockSize;
    const long count = std::min(kBlockSize, draws - begin);
    BlockSums sums;
    for (long i = 0; i < count; ++i) {
      const double snr = gamma_variate(rng, normal, shape) * scale;
      const double per = per_awgn_exact(scheme, n_bits, snr);
      sums.sum += per;
      sums.sum_sq += per * per;
    }
    blocks[static_cast<std::size_t>(block)] = sums;
  });

  // Fixed-order reduction keeps the result independent of worker count.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const BlockSums& b : blocks) {
    sum += b.sum;
    sum_sq += b.sum_sq;
  }
  const double n = static_cast<double>(draws);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
  return {mean, std::sqrt(variance / n), draws, seed,
          "splitmix64+box-muller+marsaglia-tsang"};
}

QuadResult omega0_numeric(const ModulationScheme& scheme, int n_bits, double tol,
                          long max_evals) {
  if (!(tol >= 1e-10)) {
    throw std::domain_error("omega0_numeric: tol must be >= 1e-10");
  }
  const auto integrand = [&](double snr) {
    return per_awgn_exact(scheme, n_bits, snr);
  };
  return integrate_semi_infinite(integrand, transition_scale(scheme, n_bits), tol,
                                 max_evals);
}

}  // namespace evtper
