#include "evtper/modulation.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>

#include "evtper/specfun.hpp"

namespace evtper {
namespace {

double parse_positive(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw std::invalid_argument(std::string("parse_scheme: bad ") + what + " '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

ModulationScheme fsk() { return {"fsk", BerForm::Exponential, 0.5, 0.5}; }

ModulationScheme dpsk() { return {"dpsk", BerForm::Exponential, 0.5, 1.0}; }

ModulationScheme bpsk() { return {"bpsk", BerForm::QFunction, 1.0, 2.0}; }

ModulationScheme mqam(int constellation_size) {
  const int m = constellation_size;
  // Square constellations only: M = 4^j.
  bool power_of_four = m >= 4 && (m & (m - 1)) == 0;
  if (power_of_four) {
    int log2m = 0;
    for (int v = m; v > 1; v >>= 1) ++log2m;
    power_of_four = log2m % 2 == 0;
  }
  if (!power_of_four) {
    throw std::invalid_argument("mqam: constellation size must be a power of 4 (>= 4), got " +
                                std::to_string(m));
  }
  const double bits_per_symbol = std::log2(static_cast<double>(m));
  const double coeff = 4.0 / bits_per_symbol * (1.0 - 1.0 / std::sqrt(static_cast<double>(m)));
  const double snr_scale = 3.0 * bits_per_symbol / (m - 1);
  return {"qam" + std::to_string(m), BerForm::QFunction, coeff, snr_scale};
}

ModulationScheme parse_scheme(std::string_view selector) {
  if (selector == "fsk") return fsk();
  if (selector == "dpsk") return dpsk();
  if (selector == "bpsk") return bpsk();
  if (selector == "qam16") return mqam(16);
  if (selector == "qam64") return mqam(64);
  if (selector.starts_with("custom:")) {
    std::string_view rest = selector.substr(7);
    const auto comma1 = rest.find(',');
    const auto comma2 = rest.find(',', comma1 + 1);
    if (comma1 == std::string_view::npos || comma2 == std::string_view::npos) {
      throw std::invalid_argument(
          "parse_scheme: custom scheme needs custom:<q|exp>,<coeff>,<snr_scale>");
    }
    const std::string_view form_name = rest.substr(0, comma1);
    BerForm form;
    if (form_name == "q") {
      form = BerForm::QFunction;
    } else if (form_name == "exp") {
      form = BerForm::Exponential;
    } else {
      throw std::invalid_argument("parse_scheme: custom form must be 'q' or 'exp', got '" +
                                  std::string(form_name) + "'");
    }
    const double coeff = parse_positive(rest.substr(comma1 + 1, comma2 - comma1 - 1), "coeff");
    const double snr_scale = parse_positive(rest.substr(comma2 + 1), "snr_scale");
    return {std::string(selector), form, coeff, snr_scale};
  }
  throw std::invalid_argument("parse_scheme: unknown scheme '" + std::string(selector) + "'");
}

double ber(const ModulationScheme& scheme, double snr) {
  if (!(snr >= 0.0)) throw std::domain_error("ber: SNR must be non-negative");
  switch (scheme.form) {
    case BerForm::QFunction:
      return scheme.coeff * q_function(std::sqrt(scheme.snr_scale * snr));
    case BerForm::Exponential:
      return scheme.coeff * std::exp(-scheme.snr_scale * snr);
  }
  throw std::logic_error("ber: unreachable");
}

}  // namespace evtper
