// Independent oracles for the test suites. These deliberately avoid the
// code paths (and the <cmath> kernels) used by the library, so round-trip
// checks stay meaningful.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>

namespace evtper::testref {

// erf via its Maclaurin series: (2/sqrt(pi)) sum (-1)^k x^(2k+1) / (k!(2k+1)).
// Converges for all x; usable to ~1e-13 relative for |x| <= 3 (cancellation
// grows past that).
inline double erf_series(double x) {
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / static_cast<double>(k);
    const double contribution = term / static_cast<double>(2 * k + 1);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

// ln Gamma(1+x) = -euler*x + sum_{k>=2} (-1)^k zeta(k) x^k / k, |x| < 1.
// Only used near x = 0 where a handful of terms reach machine precision.
inline double gamma_one_plus_series(double x) {
  constexpr double kZeta[] = {
      // zeta(2) .. zeta(12)
      1.6449340668482264, 1.2020569031595943, 1.0823232337111382,
      1.0369277551433699, 1.0173430619844491, 1.0083492773819228,
      1.0040773561979443, 1.0020083928260822, 1.0009945751278181,
      1.0004941886041195, 1.0002460865533080,
  };
  double log_gamma = -std::numbers::egamma * x;
  double sign = 1.0;
  double power = x;
  for (int k = 2; k <= 12; ++k) {
    power *= x;
    log_gamma += sign * kZeta[k - 2] * power / static_cast<double>(k);
    sign = -sign;
  }
  return std::exp(log_gamma);
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                 double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace evtper::testref
