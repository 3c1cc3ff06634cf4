#pragma once

// Real gamma function helpers and the Dawson/erfi pair used throughout the
// library.  Everything here is a pure function of its arguments.

namespace fracosc::ml {

// Gamma(x) for real x.  Throws std::domain_error at the poles x = 0, -1, -2, ...
// Relative accuracy better than 1e-13 on [-170, 170] away from the poles.
double gamma_real(double x);

// 1/Gamma(x), defined for all real x; returns 0 at the poles.
double rgamma(double x);

// sin(pi*x) and cos(pi*x) with exact range reduction on the integer grid.
double sinpi(double x);
double cospi(double x);

// Dawson integral D(x) = exp(-x^2) * int_0^x exp(y^2) dy.
// Odd, bounded, absolute accuracy better than 1e-12 for all finite x.
double dawson(double x);

// Imaginary error function, erfi(x) = (2/sqrt(pi)) exp(x^2) D(x), for x >= 0.
// Throws std::domain_error for x < 0 and std::overflow_error for x > 26
// (exp(x^2) leaves double range just above that).
double erfi(double x);

}  // namespace fracosc::ml
