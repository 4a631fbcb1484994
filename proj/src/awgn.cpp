#include "evtper/awgn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "evtper/specfun.hpp"

namespace evtper {
namespace {

void check_packet_length(int n_bits) {
  if (n_bits < 1) {
    throw std::domain_error("packet length must be >= 1, got " + std::to_string(n_bits));
  }
}

}  // namespace

double per_awgn_exact(const ModulationScheme& scheme, int n_bits, double snr) {
  check_packet_length(n_bits);
  const double bit_error = ber(scheme, snr);
  if (bit_error >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n_bits) * std::log1p(-bit_error));
}

NormingConstants norming_constants(const ModulationScheme& scheme, int n_bits) {
  check_packet_length(n_bits);
  const double effective_n = static_cast<double>(n_bits) * scheme.coeff;
  switch (scheme.form) {
    case BerForm::Exponential: {
      if (!(effective_n > 1.0)) {
        throw std::domain_error(
            "norming_constants: exponential form requires N*coeff > 1, got N*coeff = " +
            std::to_string(effective_n));
      }
      return {std::log(effective_n) / scheme.snr_scale, 1.0 / scheme.snr_scale};
    }
    case BerForm::QFunction: {
      if (!(effective_n > 2.0)) {
        throw std::domain_error(
            "norming_constants: Q form requires N*coeff > 2, got N*coeff = " +
            std::to_string(effective_n));
      }
      // erfc_inv(q) == erf_inv(1-q); using the complementary form keeps the
      // upper-tail quantile exact for large N*coeff.
      const double root_a = erfc_inv(2.0 / effective_n);
      const double root_b = erfc_inv(2.0 / (effective_n * std::numbers::e));
      const double location = 2.0 / scheme.snr_scale * root_a * root_a;
      const double scale = 2.0 / scheme.snr_scale * root_b * root_b - location;
      return {location, scale};
    }
  }
  throw std::logic_error("norming_constants: unreachable");
}

double per_awgn_gumbel(const NormingConstants& nc, double snr) {
  return -std::expm1(-std::exp(-(snr - nc.location) / nc.scale));
}

double per_awgn_gumbel(const ModulationScheme& scheme, int n_bits, double snr) {
  return per_awgn_gumbel(norming_constants(scheme, n_bits), snr);
}

}  // namespace evtper
