#pragma once

// Bennett's inequality for sums of bounded independent zero-mean variables,
// and the specialized tail bound obtained from it via h(u) >= u*ln(u/e): for
// sums of the real parts of the degree-1 components, with variance budget
// 10^4 * eps' and pointwise bound c,
//
//   Pr[sum <= -t] <= exp(-(t/c) * ln(1e-4*t*c / (e*eps')))   for t >= 1/6.
//
// Exponents are formed first and exponentiated once, so valid regimes with
// exponents in the hundreds do not overflow intermediates.

namespace dictatorlab {

/// Inputs to Bennett's bound: total variance, almost-sure upper bound on
/// each summand, and the threshold. All strictly positive.
struct TailParams {
    double sigma_sq = 1.0;
    double c = 1.0;
    double t = 1.0;
};

/// h(u) = (1+u)ln(1+u) - u, u >= 0.
double bennett_h(double u);

/// exp(-(sigma^2/c^2) h(t c / sigma^2)), in (0,1].
double bennett_tail(const TailParams& params);

/// exp(-(t/c) ln(1e-4*t*c/(e*eps'))); requires t >= max(1/6, 1e4*e*eps'/c).
/// Always at least bennett_tail({1e4*eps', c, t}) in its domain.
double lemma33_tail(double eps_prime, double c, double t);

}  // namespace dictatorlab
