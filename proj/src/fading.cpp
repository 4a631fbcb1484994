#include "evtper/fading.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "evtper/quadrature.hpp"
#include "evtper/specfun.hpp"

namespace evtper {
namespace {

constexpr int kMaxDerivativeOrder = 15;
constexpr int kMaxIntegerM = 16;  // bounded by polygamma order support

bool is_integer_m(double m) { return m == std::floor(m); }

// Quantities shared verbatim between the closed forms and the generic
// recursion. Reusing the same double-precision kernel evaluations (and the
// same rounding of s and gamma_arg) leaves only long-double combination
// arithmetic between the two routes, which keeps their relative gap near
// 1e-13 even where PER ~ 1e-8 and the final 1-X cancellation bites.
struct KernelPieces {
  double s;          // m / mean_snr, the Laplace variable
  double gamma_arg;  // 1 + scale * s
  long double w;     // -location*s + lnGamma(gamma_arg)
};

KernelPieces kernel_pieces(const NormingConstants& nc, int m, double mean_snr) {
  KernelPieces pieces;
  pieces.s = static_cast<double>(m) / mean_snr;
  pieces.gamma_arg = 1.0 + nc.scale * pieces.s;
  pieces.w = -static_cast<long double>(nc.location) * pieces.s +
             static_cast<long double>(ln_gamma(pieces.gamma_arg));
  return pieces;
}

double check_per_range(long double per, const char* where) {
  if (std::isnan(static_cast<double>(per))) {
    throw std::logic_error(std::string(where) + ": PER evaluated to NaN");
  }
  // Tiny excursions are cancellation noise; anything bigger means the
  // Gumbel left tail spills below zero SNR (mean SNR far under the AWGN
  // transition) and the closed form stops being meaningful there.
  if (per < 0.0L && per > -1e-9L) return 0.0;
  if (per > 1.0L && per < 1.0L + 1e-9L) return 1.0;
  if (per < 0.0L || per > 1.0L) {
    throw std::domain_error(std::string(where) +
                            ": PER outside [0,1] (" + std::to_string(static_cast<double>(per)) +
                            "); the EVT form breaks down this far below the AWGN transition");
  }
  return static_cast<double>(per);
}

// m = 1 (Rayleigh): 1 - exp(-a/g) Gamma(1 + b/g).
double closed_form_m1(const KernelPieces& pieces) {
  return check_per_range(-std::expm1(pieces.w), "avg_per_evt(m=1)");
}

// m = 2: 1 - exp(-2a/g) Gamma(1+2b/g) (1 + 2a/g - (2b/g) psi(1+2b/g)).
double closed_form_m2(const NormingConstants& nc, const KernelPieces& pieces) {
  const long double a = static_cast<long double>(nc.location) * pieces.s;
  const long double b = static_cast<long double>(nc.scale) * pieces.s;
  const long double psi = digamma(pieces.gamma_arg);
  const long double factor = 1.0L + a - b * psi;
  return check_per_range(1.0L - std::exp(pieces.w) * factor, "avg_per_evt(m=2)");
}

// m = 3: 1 - (1/2) exp(-3a/g) Gamma(1+3b/g) (2 + 9a^2/g^2 + 6a/g
//        + 9b^2/g^2 psi_1(1+3b/g) - 6b/g psi(1+3b/g)
//        + 9b^2/g^2 psi(1+3b/g)^2 - 18ab/g^2 psi(1+3b/g)).
// The printed form of the last term lacks the square on the mean SNR; the
// Leibniz evaluation of the second derivative fixes it (see tests).
double closed_form_m3(const NormingConstants& nc, const KernelPieces& pieces) {
  const long double a = static_cast<long double>(nc.location) * pieces.s;
  const long double b = static_cast<long double>(nc.scale) * pieces.s;
  const long double psi = digamma(pieces.gamma_arg);
  const long double psi1 = trigamma(pieces.gamma_arg);
  const long double bracket = 2.0L + a * a + 2.0L * a + b * b * psi1 - 2.0L * b * psi +
                              b * b * psi * psi - 2.0L * a * b * psi;
  return check_per_range(1.0L - 0.5L * std::exp(pieces.w) * bracket, "avg_per_evt(m=3)");
}

// Leibniz recursion for h = exp(u)/s with the m^m/(gbar^m Gamma(m)) prefactor
// folded through analytically: the g^(k) = (-1)^k k!/s^{k+1} factors collapse
// the Leibniz sum to
//   1 - PER = sum_{j=0}^{m-1} (-s)^j f^(j)(s) / j!,   f = exp(u),
// which keeps every intermediate O(1) instead of pairing a huge derivative
// with a tiny prefactor.
double generic_recursion(const NormingConstants& nc, int m, const KernelPieces& pieces) {
  std::array<long double, kMaxIntegerM> u_deriv{};  // u_deriv[n] = u^(n), n >= 1
  long double scale_pow = nc.scale;
  for (int n = 1; n < m; ++n) {
    u_deriv[n] = scale_pow * static_cast<long double>(polygamma(n - 1, pieces.gamma_arg));
    scale_pow *= nc.scale;
  }
  if (m >= 2) u_deriv[1] -= nc.location;

  std::array<long double, kMaxIntegerM> f_deriv{};
  f_deriv[0] = std::exp(pieces.w);
  for (int n = 1; n < m; ++n) {
    long double binom = 1.0L;  // C(n-1, k)
    long double acc = 0.0L;
    for (int k = 0; k < n; ++k) {
      acc += binom * u_deriv[k + 1] * f_deriv[n - 1 - k];
      binom *= static_cast<long double>(n - 1 - k) / static_cast<long double>(k + 1);
    }
    f_deriv[n] = acc;
  }

  long double survival = 0.0L;  // sum (-s)^j f^(j)/j!
  long double term_scale = 1.0L;
  for (int j = 0; j < m; ++j) {
    survival += term_scale * f_deriv[j];
    term_scale *= -pieces.s / static_cast<long double>(j + 1);
  }
  return check_per_range(1.0L - survival, "avg_per_evt_generic");
}

}  // namespace

FadingChannel::FadingChannel(double m_param, double mean_snr_linear)
    : m(m_param), mean_snr(mean_snr_linear) {
  if (!(m >= 0.5)) {
    throw std::domain_error("FadingChannel: m must be >= 0.5, got " + std::to_string(m));
  }
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("FadingChannel: mean SNR must be > 0");
  }
}

double nakagami_pdf(const FadingChannel& ch, double snr) {
  if (!(snr >= 0.0)) throw std::domain_error("nakagami_pdf: SNR must be non-negative");
  if (snr == 0.0) {
    if (ch.m > 1.0) return 0.0;
    if (ch.m == 1.0) return 1.0 / ch.mean_snr;
    return std::numeric_limits<double>::infinity();  // integrable singularity
  }
  // m^m g^{m-1} exp(-m g / gbar) / (gbar^m Gamma(m)), in log space to keep
  // large m and extreme SNRs inside double range.
  const double log_pdf = ch.m * std::log(ch.m) + (ch.m - 1.0) * std::log(snr) -
                         ch.m * snr / ch.mean_snr - ch.m * std::log(ch.mean_snr) -
                         ln_gamma(ch.m);
  return std::exp(log_pdf);
}

double gumbel_laplace_derivative(double location, double scale, double s, int order) {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw std::domain_error("gumbel_laplace_derivative: order must lie in [0, 15], got " +
                            std::to_string(order));
  }
  if (!(s > 0.0)) throw std::domain_error("gumbel_laplace_derivative: s must be > 0");
  if (!(1.0 + s * scale > 0.0)) {
    throw std::domain_error("gumbel_laplace_derivative: 1 + s*scale must be > 0");
  }

  const double gamma_arg = 1.0 + scale * s;

  // u(s) = -location*s + lnGamma(1 + scale*s);
  // u^(1) = -location + scale*psi(gamma_arg), u^(n) = scale^n psi_{n-1}(gamma_arg).
  std::array<double, kMaxDerivativeOrder + 1> u_deriv{};  // u_deriv[n] = u^(n), n >= 1
  double scale_pow = scale;
  for (int n = 1; n <= order; ++n) {
    u_deriv[n] = scale_pow * polygamma(n - 1, gamma_arg);
    scale_pow *= scale;
  }
  if (order >= 1) u_deriv[1] -= location;

  // f = exp(u): f^(n) = sum_{k=0}^{n-1} C(n-1,k) u^(k+1) f^(n-1-k).
  std::array<double, kMaxDerivativeOrder + 1> f_deriv{};
  f_deriv[0] = std::exp(-location * s + ln_gamma(gamma_arg));
  for (int n = 1; n <= order; ++n) {
    double binom = 1.0;  // C(n-1, k) built incrementally
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += binom * u_deriv[k + 1] * f_deriv[n - 1 - k];
      binom *= static_cast<double>(n - 1 - k) / static_cast<double>(k + 1);
    }
    f_deriv[n] = acc;
  }

  // g = 1/s: g^(k) = (-1)^k k! / s^{k+1}; combine with the Leibniz rule.
  double result = 0.0;
  double g_deriv = 1.0 / s;  // g^(0)
  double binom = 1.0;        // C(order, k)
  for (int k = 0; k <= order; ++k) {
    result += binom * f_deriv[order - k] * g_deriv;
    g_deriv *= -static_cast<double>(k + 1) / s;
    binom *= static_cast<double>(order - k) / static_cast<double>(k + 1);
  }
  return result;
}

double avg_per_evt_closed_form(const ModulationScheme& scheme, int n_bits,
                               const FadingChannel& ch) {
  if (!is_integer_m(ch.m) || ch.m < 1.0 || ch.m > 3.0) {
    throw std::domain_error("avg_per_evt_closed_form: only m in {1,2,3} has a dedicated form");
  }
  const NormingConstants nc = norming_constants(scheme, n_bits);
  const int m = static_cast<int>(ch.m);
  const KernelPieces pieces = kernel_pieces(nc, m, ch.mean_snr);
  switch (m) {
    case 2: return closed_form_m2(nc, pieces);
    case 3: return closed_form_m3(nc, pieces);
    default: return closed_form_m1(pieces);
  }
}

double avg_per_evt_generic(const ModulationScheme& scheme, int n_bits,
                           const FadingChannel& ch) {
  if (!is_integer_m(ch.m) || ch.m < 1.0 || ch.m > kMaxIntegerM) {
    throw std::domain_error("avg_per_evt_generic: m must be an integer in [1, 16]");
  }
  const NormingConstants nc = norming_constants(scheme, n_bits);
  const int m = static_cast<int>(ch.m);
  return generic_recursion(nc, m, kernel_pieces(nc, m, ch.mean_snr));
}

AvgPerResult avg_per_evt_detail(const ModulationScheme& scheme, int n_bits,
                                const FadingChannel& ch) {
  if (is_integer_m(ch.m) && ch.m >= 1.0 && ch.m <= kMaxIntegerM) {
    const int m = static_cast<int>(ch.m);
    const ModulationScheme& s = scheme;
    const double per = m <= 3 ? avg_per_evt_closed_form(s, n_bits, ch)
                              : avg_per_evt_generic(s, n_bits, ch);
    return {per, AvgPerMethod::ClosedFormEvt};
  }
  // Non-integer m (and integer m past the polygamma order cap): the
  // derivative order m-1 is not available; integrate the Gumbel integrand
  // against the fading PDF instead.
  const NormingConstants nc = norming_constants(scheme, n_bits);
  const auto integrand = [&](double snr) {
    return per_awgn_gumbel(nc, snr) * nakagami_pdf(ch, snr);
  };
  const QuadResult integral = integrate_semi_infinite(integrand, ch.mean_snr, 1e-10);
  return {check_per_range(integral.value, "avg_per_evt(quadrature)"),
          AvgPerMethod::QuadratureOracle};
}

double avg_per_evt(const ModulationScheme& scheme, int n_bits, const FadingChannel& ch) {
  return avg_per_evt_detail(scheme, n_bits, ch).value;
}

}  // namespace evtper
