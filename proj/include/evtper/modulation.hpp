// Uncoded modulation schemes and their instantaneous BER in the two
// generic forms: coeff*Q(sqrt(snr_scale*g)) and coeff*exp(-snr_scale*g).
#pragma once

#include <string>
#include <string_view>

namespace evtper {

enum class BerForm {
  QFunction,    // coherent schemes: BPSK, M-QAM, ...
  Exponential,  // non-coherent schemes: FSK, DPSK
};

struct ModulationScheme {
  std::string name;
  BerForm form;
  double coeff;      // multiplies the Q/exp kernel; > 0
  double snr_scale;  // scales the SNR inside the kernel; > 0
};

// Built-in schemes. DPSK uses the standard DBPSK constants (coeff=1/2,
// snr_scale=1) as a convention. mqam requires a square constellation:
// M a power of 4, M >= 4; throws std::invalid_argument otherwise.
ModulationScheme fsk();
ModulationScheme dpsk();
ModulationScheme bpsk();
ModulationScheme mqam(int constellation_size);

// CLI scheme selector: fsk | dpsk | bpsk | qam16 | qam64 |
// custom:<q|exp>,<coeff>,<snr_scale>. Throws std::invalid_argument.
ModulationScheme parse_scheme(std::string_view selector);

// Instantaneous BER at linear SNR g >= 0. Throws std::domain_error for
// negative SNR.
double ber(const ModulationScheme& scheme, double snr);

}  // namespace evtper
