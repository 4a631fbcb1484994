#include "evtper/modulation.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"

using namespace evtper;

TEST_CASE("builtin scheme constants") {
  const ModulationScheme f = fsk();
  CHECK(f.form == BerForm::Exponential);
  CHECK(f.coeff == 0.5);
  CHECK(f.snr_scale == 0.5);

  const ModulationScheme b = bpsk();
  CHECK(b.form == BerForm::QFunction);
  CHECK(b.coeff == 1.0);
  CHECK(b.snr_scale == 2.0);

  const ModulationScheme d = dpsk();
  CHECK(d.form == BerForm::Exponential);
  CHECK(d.coeff == 0.5);
  CHECK(d.snr_scale == 1.0);

  const ModulationScheme q16 = mqam(16);
  CHECK(q16.form == BerForm::QFunction);
  CHECK(q16.coeff == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(q16.snr_scale == doctest::Approx(0.8).epsilon(1e-15));

  // QPSK collapses to the BPSK constants when computed from the formula.
  const ModulationScheme q4 = mqam(4);
  CHECK(q4.coeff == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q4.snr_scale == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(mqam(8), std::invalid_argument);
  CHECK_THROWS_AS(mqam(2), std::invalid_argument);
  CHECK_THROWS_AS(mqam(-16), std::invalid_argument);
}

TEST_CASE("instantaneous BER values") {
  CHECK(ber(fsk(), 2.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(ber(fsk(), 0.0) == 0.5);
  // Q(sqrt(8)) = erfc(2)/2, pinned by the high-precision fixture.
  CHECK(ber(bpsk(), 4.0) == doctest::Approx(fixtures::kQSqrt8).epsilon(1e-13));
  CHECK_THROWS_AS(ber(fsk(), -0.1), std::domain_error);
}

TEST_CASE("BER is strictly decreasing and bounded by 1/2") {
  for (const ModulationScheme& scheme : {fsk(), dpsk(), bpsk(), mqam(16), mqam(64)}) {
    double previous = 1.0;
    for (int i = 0; i <= 50; ++i) {
      const double snr = 40.0 * i / 50.0;
      const double value = ber(scheme, snr);
      CHECK(value > 0.0);
      CHECK(value <= 0.5);
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("scheme selector parsing") {
  CHECK(parse_scheme("fsk").name == "fsk");
  CHECK(parse_scheme("qam64").snr_scale == doctest::Approx(18.0 / 63.0).epsilon(1e-15));

  const ModulationScheme custom = parse_scheme("custom:q,0.75,0.8");
  CHECK(custom.form == BerForm::QFunction);
  CHECK(custom.coeff == 0.75);
  CHECK(custom.snr_scale == 0.8);
  const ModulationScheme custom_exp = parse_scheme("custom:exp,0.5,1.5");
  CHECK(custom_exp.form == BerForm::Exponential);

  CHECK_THROWS_AS(parse_scheme("qam8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scheme("psk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scheme("custom:q,0.75"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scheme("custom:sine,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scheme("custom:q,-1,1"), std::invalid_argument);
}
