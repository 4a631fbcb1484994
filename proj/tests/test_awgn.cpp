#include "evtper/awgn.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "evtper/specfun.hpp"
#include "fixtures.hpp"

using namespace evtper;

namespace {

std::vector<double> gumbel_grid(const NormingConstants& nc, int points) {
  // [a - 3b, a + 6b], clamped at 0 where the exact PER is defined.
  const double lo = std::max(0.0, nc.location - 3.0 * nc.scale);
  const double hi = nc.location + 6.0 * nc.scale;
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(lo + (hi - lo) * i / (points - 1));
  }
  return grid;
}

double sup_gumbel_error(const ModulationScheme& scheme, int n_bits) {
  const NormingConstants nc = norming_constants(scheme, n_bits);
  double worst = 0.0;
  for (double snr : gumbel_grid(nc, 64)) {
    worst = std::max(worst,
                     std::abs(per_awgn_exact(scheme, n_bits, snr) - per_awgn_gumbel(nc, snr)));
  }
  return worst;
}

}  // namespace

TEST_CASE("exact PER basics") {
  for (const ModulationScheme& scheme : {fsk(), bpsk(), mqam(16)}) {
    for (double snr : {0.0, 1.0, 7.3}) {
      CHECK(per_awgn_exact(scheme, 1, snr) == doctest::Approx(ber(scheme, snr)).epsilon(1e-15));
    }
  }
  CHECK(per_awgn_exact(bpsk(), 10, 4.0) ==
        doctest::Approx(fixtures::kPerBpskN10Snr4).epsilon(1e-13));
  // BER underflows to zero far in the tail; the PER must follow.
  CHECK(per_awgn_exact(fsk(), 100, 1e6) < 1e-200);
  CHECK_THROWS_AS(per_awgn_exact(fsk(), 0, 1.0), std::domain_error);
}

TEST_CASE("exact PER stays accurate for tiny BER") {
  // At BER ~ 1e-14 the naive 1-(1-b)^N would collapse to 0 or noise;
  // expm1/log1p keeps PER ~ N*b.
  const ModulationScheme scheme = fsk();
  const double snr = 2.0 * std::log(0.5 / 1e-14);  // ber = 1e-14
  const double bit_error = ber(scheme, snr);
  CHECK(bit_error < 1e-12);
  const double per = per_awgn_exact(scheme, 10, snr);
  CHECK(per == doctest::Approx(10.0 * bit_error).epsilon(1e-9));
}

TEST_CASE("norming constants, exponential form") {
  const NormingConstants nc = norming_constants(fsk(), 256);
  CHECK(nc.location == doctest::Approx(2.0 * std::log(128.0)).epsilon(1e-15));
  CHECK(nc.scale == 2.0);

  const NormingConstants dpsk_nc = norming_constants(dpsk(), 256);
  CHECK(dpsk_nc.location == doctest::Approx(std::log(128.0)).epsilon(1e-15));
  CHECK(dpsk_nc.scale == 1.0);

  // N*coeff = 1 is out of domain for the exponential form.
  CHECK_THROWS_WITH_AS(static_cast<void>(norming_constants(fsk(), 2)),
                       doctest::Contains("N*coeff > 1"), std::domain_error);
}

TEST_CASE("norming constants, Q form") {
  // Definition in the SNR domain: a_N = (2/k) erfinv(1-2/(N c))^2.
  const NormingConstants nc = norming_constants(bpsk(), 1024);
  const double root = erf_inv(1.0 - 2.0 / 1024.0);
  CHECK(nc.location == doctest::Approx(root * root).epsilon(1e-13));
  const double root_e = erf_inv(1.0 - 2.0 / (1024.0 * std::numbers::e));
  CHECK(nc.scale == doctest::Approx(root_e * root_e - root * root).epsilon(1e-12));

  for (int n : {3, 8, 64, 1024, 65536}) {
    CHECK(norming_constants(bpsk(), n).scale > 0.0);
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(norming_constants(bpsk(), 2)),
                       doctest::Contains("N*coeff > 2"), std::domain_error);
}

TEST_CASE("Gumbel PER at the location and median") {
  const NormingConstants nc = norming_constants(fsk(), 256);
  CHECK(per_awgn_gumbel(nc, nc.location) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(std::abs(per_awgn_gumbel(fsk(), 256, 9.704061) - 0.6321206) < 1e-6);
  // Median: snr with exp(-(snr-a)/b) = ln 2.
  const double median_snr = nc.location - nc.scale * std::log(std::numbers::ln2);
  CHECK(per_awgn_gumbel(nc, median_snr) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("both PER functions are monotone in SNR and N") {
  for (const ModulationScheme& scheme : {fsk(), bpsk(), mqam(16)}) {
    const NormingConstants nc = norming_constants(scheme, 256);
    double prev_exact = 2.0;
    double prev_gumbel = 2.0;
    for (double snr : gumbel_grid(nc, 32)) {
      const double exact = per_awgn_exact(scheme, 256, snr);
      const double gumbel = per_awgn_gumbel(nc, snr);
      CHECK(exact < prev_exact);
      CHECK(gumbel < prev_gumbel);
      CHECK(exact >= 0.0);
      CHECK(exact <= 1.0);
      CHECK(gumbel > 0.0);
      CHECK(gumbel < 1.0);
      prev_exact = exact;
      prev_gumbel = gumbel;
      // Increasing in N at fixed SNR.
      CHECK(per_awgn_exact(scheme, 512, snr) > exact);
      CHECK(per_awgn_gumbel(scheme, 512, snr) > gumbel);
    }
  }
}

TEST_CASE("Gumbel approximation converges: E(4N) < E(N)") {
  for (int n : {64, 256, 1024}) {
    CHECK(sup_gumbel_error(bpsk(), 4 * n) < sup_gumbel_error(bpsk(), n));
  }
}

TEST_CASE("coeff-power chain tightens with N for 16-QAM") {
  // max |exact - (1 - Phi(sqrt(k g))^{N c})| over the Gumbel grid must
  // decrease in N; Phi = 1 - Q.
  const ModulationScheme scheme = mqam(16);
  const auto chain_error = [&](int n_bits) {
    const NormingConstants nc = norming_constants(scheme, n_bits);
    double worst = 0.0;
    for (double snr : gumbel_grid(nc, 64)) {
      const double phi = 1.0 - q_function(std::sqrt(scheme.snr_scale * snr));
      const double powered =
          -std::expm1(static_cast<double>(n_bits) * scheme.coeff * std::log(phi));
      worst = std::max(worst, std::abs(per_awgn_exact(scheme, n_bits, snr) - powered));
    }
    return worst;
  };
  CHECK(chain_error(256) < chain_error(64));
  CHECK(chain_error(1024) < chain_error(256));
}

TEST_CASE("domain-of-attraction condition: d/dx[(1-F)/f] -> 0") {
  // Normal case via central differences of the Mills ratio; the magnitude
  // must shrink toward 0 as x grows.
  const auto mills = [](double x) {
    return q_function(x) / (std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi));
  };
  double previous = 1.0;
  for (double x : {2.0, 4.0, 8.0, 16.0}) {
    const double h = 1e-5 * x;
    const double derivative = (mills(x + h) - mills(x - h)) / (2.0 * h);
    CHECK(std::abs(derivative) < previous);
    previous = std::abs(derivative);
  }
  CHECK(previous < 1e-2);
  // Exponential case: (1-F)/f is the constant 1/lambda, derivative is 0.
  const auto exp_ratio = [](double x) { return std::exp(-x) / std::exp(-x); };
  const double d = (exp_ratio(5.0 + 1e-6) - exp_ratio(5.0 - 1e-6)) / 2e-6;
  CHECK(d == 0.0);
}
