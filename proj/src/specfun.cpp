#include "evtper/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace evtper {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kHalfSqrtPi = 0.88622692545275801365;

// Hastings rational approximation of the upper-tail normal quantile
// (Abramowitz & Stegun 26.2.23), |error| < 4.5e-4. Only used to seed
// Newton, which owns the final accuracy.
double normal_upper_quantile_seed(double tail_prob) {
  const double t = std::sqrt(-2.0 * std::log(tail_prob));
  const double num = 2.515517 + t * (0.802853 + t * 0.010328);
  const double den = 1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308));
  return t - num / den;
}

// Safeguarded Newton for erfc(v) = q on v > 0, q in (0, 0.5). Falls back
// to bisection whenever a Newton step leaves the current bracket.
double erfc_inv_positive(double q) {
  // Far tail where exp(v^2) overflows: solve the asymptotic expansion
  // log erfc(v) ~ -v^2 - log(v sqrt(pi)) + log(1 - 1/(2v^2) + ...)
  // by fixed-point iteration on v^2.
  if (q < 1e-250) {
    const double logq = std::log(q);
    double v = std::sqrt(-logq);
    for (int i = 0; i < 8; ++i) {
      const double inv2 = 1.0 / (v * v);
      const double series = 1.0 + inv2 * (-0.5 + inv2 * (0.75 - inv2 * 1.875));
      v = std::sqrt(-logq - std::log(v * kSqrtPi) + std::log(series));
    }
    return v;
  }

  double lo = 0.0;
  double hi = 40.0;
  double v = normal_upper_quantile_seed(q / 2.0) / std::numbers::sqrt2;
  if (v <= lo || v >= hi || !std::isfinite(v)) v = 0.5 * (lo + hi);

  for (int i = 0; i < 100; ++i) {
    const double f = std::erfc(v) - q;
    if (f > 0.0) {
      lo = v;  // erfc decreasing: root above v
    } else {
      hi = v;
    }
    // f' = -2/sqrt(pi) exp(-v^2); step = f * sqrt(pi)/2 * exp(v^2).
    const double step = f * kHalfSqrtPi * std::exp(v * v);
    double next = v + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - v) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(1.0, std::abs(v))) {
      return next;
    }
    v = next;
  }
  return v;
}

// Central-branch Newton for erf(v) = p, |p| <= 0.5.
double erf_inv_central(double p) {
  // Maclaurin seed: erfinv(p) = (sqrt(pi)/2)(p + pi/12 p^3 + 7pi^2/480 p^5).
  const double p2 = p * p;
  double v = kHalfSqrtPi * p *
             (1.0 + p2 * (0.26179938779914944 + p2 * 0.14393173084921979));
  for (int i = 0; i < 4; ++i) {
    const double f = std::erf(v) - p;
    const double step = f * kHalfSqrtPi * std::exp(v * v);
    v -= step;
    if (std::abs(step) <=
        2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v))) {
      break;
    }
  }
  return v;
}

// B_{2j}/(2j)! for the Euler-Maclaurin tails, j = 1..9.
constexpr double kBernoulliOverFact[] = {
    8.3333333333333333e-02,   // 1/12
    -1.3888888888888889e-03,  // -1/720
    3.3068783068783069e-05,   // 1/30240
    -8.2671957671957672e-07,  // -1/1209600
    2.0876756987868099e-08,   // 1/47900160
    -5.2841901386874932e-10,  // -691/1307674368000
    1.3382536530684679e-11,   // 1/74724249600
    -3.3896802963225829e-13,  // -3617/10670622842880000
    8.5860620562778446e-15,   // 43867/5109094217170944000
};

// Hurwitz zeta(s, x) for integer s >= 2, x > 0: upshift recurrence to
// x + K >= threshold, then Euler-Maclaurin.
double hurwitz_zeta_int(int s, double x) {
  const double threshold = 20.0 + s;
  double sum = 0.0;
  while (x < threshold) {
    sum += std::pow(x, -s);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  double acc = std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s);
  // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}.
  double rising = s;                      // (s)_{2j-1} built incrementally
  double power = std::pow(x, -s - 1);     // x^{-(s+2j-1)}
  for (std::size_t j = 0; j < std::size(kBernoulliOverFact); ++j) {
    acc += kBernoulliOverFact[j] * rising * power;
    rising *= static_cast<double>(s + 2 * j + 1) * static_cast<double>(s + 2 * j + 2);
    power *= inv * inv;
  }
  return sum + acc;
}

// B_{2j}/(2j) for the digamma asymptotic series, j = 1..9.
constexpr double kBernoulliOver2j[] = {
    8.3333333333333333e-02,   // 1/12
    -8.3333333333333333e-03,  // -1/120
    3.9682539682539683e-03,   // 1/252
    -4.1666666666666667e-03,  // -1/240
    7.5757575757575758e-03,   // 5/660 = 1/132
    -2.1092796092796093e-02,  // -691/32760
    8.3333333333333333e-02,   // 7/84 = 1/12
    -4.4325980392156863e-01,  // -3617/8160
    3.0539543302701197e+00,   // 43867/14364
};

double digamma_impl(double x) {
  double acc = 0.0;
  while (x < 16.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_j B_{2j}/(2j) x^{-2j}.
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;
  for (double coeff : kBernoulliOver2j) {
    series += coeff * power;
    power *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

[[noreturn]] void throw_domain(const std::string& msg) {
  throw std::domain_error(msg);
}

}  // namespace

double q_function(double x) {
  if (!std::isfinite(x)) throw_domain("q_function: argument must be finite");
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double erfc_inv(double q) {
  if (!(q > 0.0 && q < 2.0)) {
    throw_domain("erfc_inv: argument must lie in (0, 2), got " + std::to_string(q));
  }
  if (q == 1.0) return 0.0;
  if (q > 1.0) {
    const double mirrored = 2.0 - q;  // exact for q in [1,2] (Sterbenz)
    return mirrored >= 0.5 ? -erf_inv_central(1.0 - mirrored)
                           : -erfc_inv_positive(mirrored);
  }
  if (q >= 0.5) return erf_inv_central(1.0 - q);  // 1-q exact for q in [0.5,1]
  return erfc_inv_positive(q);
}

double erf_inv(double p) {
  if (!(p > -1.0 && p < 1.0)) {
    throw_domain("erf_inv: argument must lie in (-1, 1), got " + std::to_string(p));
  }
  if (std::abs(p) <= 0.5) return erf_inv_central(p);
  // 1 -/+ p is exact for |p| in [0.5, 1] (Sterbenz), so no accuracy is lost
  // handing off to the erfc branch.
  return p > 0.0 ? erfc_inv_positive(1.0 - p) : -erfc_inv_positive(1.0 + p);
}

double gamma(double x) {
  if (!(x > 0.0)) throw_domain("gamma: argument must be positive");
  return std::tgamma(x);
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw_domain("ln_gamma: argument must be positive");
  return std::lgamma(x);
}

double polygamma(int n, double x) {
  if (n < 0 || n > 16) {
    throw_domain("polygamma: order must lie in [0, 16], got " + std::to_string(n));
  }
  if (!(x > 0.0)) throw_domain("polygamma: argument must be positive");
  if (n == 0) return digamma_impl(x);
  // psi_n(x) = (-1)^{n+1} n! zeta(n+1, x).
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  const double zeta = hurwitz_zeta_int(n + 1, x);
  return (n % 2 == 0 ? -1.0 : 1.0) * factorial * zeta;
}

}  // namespace evtper
