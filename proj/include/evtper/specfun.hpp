// Special functions used throughout the PER expressions: Gaussian Q,
// inverse error function, (log-)gamma and polygamma of integer order.
// All functions are pure and safe to call concurrently.
#pragma once

namespace evtper {

// Upper-tail probability of the standard normal, Q(x) = erfc(x/sqrt(2))/2.
// Relative error <= 1e-12 for |x| <= 8. Throws std::domain_error on
// non-finite input.
double q_function(double x);

// Inverse of erf on (-1, 1). Uses a dedicated asymptotic branch for
// |p| -> 1 so quantile arguments like 1 - 2/(N c) stay accurate for N up
// to 2^16 and beyond. Throws std::domain_error for |p| >= 1.
double erf_inv(double p);

// Inverse of erfc on (0, 2). erfc_inv(q) == erf_inv(1 - q) without the
// cancellation in 1 - q; preferred for upper-tail quantiles.
double erfc_inv(double q);

// Gamma function and its logarithm for x > 0. Relative error <= 1e-13 on
// [0.5, 50]. Throw std::domain_error for x <= 0.
double gamma(double x);
double ln_gamma(double x);

// n-th derivative of the digamma function, 0 <= n <= 16, x > 0.
// Relative error <= 1e-10 on x in [0.5, 50] for n <= 8.
double polygamma(int n, double x);

inline double digamma(double x) { return polygamma(0, x); }
inline double trigamma(double x) { return polygamma(1, x); }

}  // namespace evtper
