#include "evtper/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace evtper;

TEST_CASE("known semi-infinite integrals") {
  const auto expdecay = [](double x) { return std::exp(-x); };
  QuadResult r = integrate_semi_infinite(expdecay, 1.0, 1e-10);
  CHECK(std::abs(r.value - 1.0) <= 1e-10);
  CHECK(r.abs_error <= 1e-10);
  CHECK(r.evaluations > 0);

  const auto gamma2 = [](double x) { return x * std::exp(-x); };
  CHECK(std::abs(integrate_semi_infinite(gamma2, 1.0, 1e-10).value - 1.0) <= 1e-10);

  // Integrable endpoint singularity: x^{-1/2} e^{-x} integrates to sqrt(pi).
  const auto singular = [](double x) { return std::exp(-x) / std::sqrt(x); };
  CHECK(std::abs(integrate_semi_infinite(singular, 1.0, 1e-9).value -
                 std::sqrt(std::numbers::pi)) <= 1e-9);
}

TEST_CASE("scale only relocates the panels, not the answer") {
  const auto hump = [](double x) { return std::exp(-(x - 50.0) * (x - 50.0)); };
  const double want = std::sqrt(std::numbers::pi);  // full Gaussian mass, far from 0
  for (double scale : {1.0, 10.0, 200.0}) {
    CHECK(std::abs(integrate_semi_infinite(hump, scale, 1e-9).value - want) <= 1e-9);
  }
}

TEST_CASE("halving the tolerance never moves the value by more than the larger tol") {
  const auto f = [](double x) { return std::exp(-0.3 * x) / (1.0 + x * x); };
  double tol = 1e-4;
  double previous = integrate_semi_infinite(f, 3.0, tol).value;
  for (int i = 0; i < 10; ++i) {
    const double next = integrate_semi_infinite(f, 3.0, tol / 2.0).value;
    CHECK(std::abs(next - previous) <= tol);
    previous = next;
    tol /= 2.0;
  }
}

TEST_CASE("budget exhaustion raises ConvergenceError with the best estimate") {
  const auto f = [](double x) { return std::exp(-x) / std::sqrt(x); };
  try {
    integrate_semi_infinite(f, 1.0, 1e-12, 200);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_estimate.evaluations <= 200);
    CHECK(e.best_estimate.value > 0.0);
    CHECK(e.best_estimate.abs_error > 1e-12);
  }
}

TEST_CASE("input validation") {
  const auto f = [](double) { return 0.0; };
  CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(integrate_semi_infinite(f, 1.0, 0.0), std::domain_error);
}
