// Adaptive Gauss-Kronrod integration of non-negative integrands over
// [0, inf): dyadic panels anchored at a caller-supplied scale, globally
// adaptive refinement, tail extension until the marginal panel drops
// below tol/10.
#pragma once

#include <functional>
#include <stdexcept>

namespace evtper {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimated absolute error
  long evaluations = 0;    // integrand evaluations spent
};

// Raised when the evaluation budget runs out before the error estimate
// reaches the requested tolerance; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadResult best_estimate;
};

// Integrate f over [0, inf) to absolute tolerance tol. `scale` locates the
// region where the integrand lives (panels split at scale*{0.5,1,2,4,...}).
// Endpoints are never evaluated, so integrable singularities at 0 are fine.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double scale, double tol,
                                   long max_evals = 1000000);

}  // namespace evtper
