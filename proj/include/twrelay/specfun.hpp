#pragma once

namespace twrelay::specfun {

/// First-order modified Bessel function of the second kind, K1(x).
///
/// Small arguments (x <= 2) use the ascending series with the ln(x/2)*I1(x)
/// term; larger arguments use Chebyshev expansions of the exponentially
/// scaled function. Relative accuracy is better than 1e-10 across
/// [1e-6, 50]; for very large x the result underflows to 0.
///
/// Throws std::domain_error for x <= 0, NaN, or infinity.
double bessel_k1(double x);

/// Evaluates integral 0..inf of exp(-lambda/(4t) - gamma*t) dt, which
/// closes to sqrt(lambda/gamma) * K1(sqrt(lambda*gamma)).
///
/// Throws std::domain_error unless lambda > 0 and gamma > 0.
double laplace_bessel_integral(double lambda, double gamma);

} // namespace twrelay::specfun
