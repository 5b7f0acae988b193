#pragma once

// Special functions over real scalars and small non-negative integers:
// associated Laguerre polynomials, factorials, complete and incomplete Gamma.
// Everything here is a pure function and safe to call from any thread.

namespace lgt::specfun {

/// L_p^alpha(x) by upward three-term recurrence in p.
/// Throws std::domain_error for p < 0, alpha < 0 or non-finite x and
/// std::overflow_error if an intermediate exceeds 1e300 in magnitude.
double assoc_laguerre(int p, int alpha, double x);

/// n! as a double. Exact product for n <= 170, std::overflow_error beyond.
double factorial(int n);

/// log(n!) for any n >= 0.
double log_factorial(int n);

/// Gamma(a) for a > 0. Integer arguments go through factorial() so that
/// Gamma(n + 1) == factorial(n) bit for bit. Overflow is reported, not saturated.
double gamma_complete(double a);

/// log Gamma(a) for a > 0; usable where gamma_complete overflows.
double log_gamma(double a);

/// Upper incomplete Gamma(a, x) = int_x^inf t^(a-1) e^-t dt, 0 < a <= 300, x >= 0.
/// Series below x = a + 1, Lentz continued fraction above, both to 1e-14.
double gamma_upper_incomplete(double a, double x);

/// Lower incomplete gamma(a, x) = Gamma(a) - Gamma(a, x), evaluated without
/// the cancellation of the difference for x < a + 1.
double gamma_lower_incomplete(double a, double x);

/// Regularized forms P(a, x) = gamma(a, x) / Gamma(a) and Q = 1 - P. Never overflow.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

}  // namespace lgt::specfun
