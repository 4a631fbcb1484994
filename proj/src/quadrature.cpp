#include "evtper/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace evtper {
namespace {

// 15-point Kronrod abscissae for [-1,1] and weights, with the embedded
// 7-point Gauss weights (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halflen = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - halflen * kXgk[i]);
    fv[14 - i] = f(center + halflen * kXgk[i]);
  }
  fv[7] = f(center);

  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  const double mean = kronrod * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  }
  kronrod *= halflen;
  gauss *= halflen;
  resabs *= halflen;
  resasc *= halflen;

  // QUADPACK error estimate for the embedded pair.
  double err = std::abs(kronrod - gauss);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kUflow = std::numeric_limits<double>::min();
  if (resabs > kUflow / (50.0 * kEps)) {
    err = std::max(kEps * 50.0 * resabs, err);
  }
  return {a, b, kronrod, err};
}

}  // namespace

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double scale, double tol, long max_evals) {
  if (!(scale > 0.0)) throw std::domain_error("integrate_semi_infinite: scale must be > 0");
  if (!(tol > 0.0)) throw std::domain_error("integrate_semi_infinite: tol must be > 0");

  long evals = 0;
  std::priority_queue<Panel> queue;
  double active_value = 0.0;
  double active_err = 0.0;
  double frozen_value = 0.0;  // panels refined down to fp resolution
  double frozen_err = 0.0;

  auto push_panel = [&](double a, double b) -> double {
    Panel p = gk15(f, a, b);
    evals += 15;
    active_value += p.value;
    active_err += p.error;
    queue.push(p);
    return p.value;
  };

  // Initial dyadic panels: [0, s/2], [s/2, s], [s, 2s], ... extended out to
  // at least 64*scale and from there until the marginal panel contributes
  // less than tol/10 twice in a row (rides out a transition that starts
  // past the current edge).
  push_panel(0.0, 0.5 * scale);
  push_panel(0.5 * scale, scale);
  double upper = scale;
  int quiet_panels = 0;
  while ((quiet_panels < 2 || upper < 64.0 * scale) && upper < 1e300 &&
         evals < max_evals) {
    const double contribution = push_panel(upper, 2.0 * upper);
    quiet_panels = std::abs(contribution) < 0.1 * tol ? quiet_panels + 1 : 0;
    upper *= 2.0;
  }

  // Globally adaptive refinement: bisect the worst panel until the summed
  // error estimate meets tol.
  while (active_err + frozen_err > tol && !queue.empty()) {
    if (evals + 30 > max_evals) {
      QuadResult best{active_value + frozen_value, active_err + frozen_err,
                      evals};
      throw ConvergenceError(
          "integrate_semi_infinite: evaluation budget exhausted (error "
          "estimate " + std::to_string(best.abs_error) + " > tol " +
              std::to_string(tol) + ")",
          best);
    }
    Panel worst = queue.top();
    queue.pop();
    active_value -= worst.value;
    active_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; park it and refine the rest.
      frozen_value += worst.value;
      frozen_err += worst.error;
      continue;
    }
    push_panel(worst.a, mid);
    push_panel(mid, worst.b);
  }

  return {active_value + frozen_value, active_err + frozen_err, evals};
}

}  // namespace evtper
