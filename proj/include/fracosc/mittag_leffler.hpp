#pragma once

#include <cstdint>

namespace fracosc::ml {

// One evaluation request for E_{mu,nu}(z) = sum_k z^k / Gamma(mu k + nu).
struct MLArg {
    double mu;          // series exponent, > 0
    double nu;          // series shift, > 0
    double z;           // real argument; the library targets z <= 0
    double tol = 1e-10; // requested absolute accuracy

    void validate() const;  // throws std::invalid_argument on violation
};

enum class Method : std::uint8_t { Series, Spectral, Asymptotic, ClosedForm };

struct MLValue {
    double value = 0.0;
    double err_estimate = 0.0;  // upper bound committed to by the producer
    Method method = Method::Series;
};

// Largest |z| for which the defining power series is summed in doubles
// without losing more than ~1e-12 to cancellation.
double series_radius(double mu);

// Direct summation of the defining series with a geometric remainder bound
// plus a rounding floor.  Requires |z| <= series_radius(mu); throws
// std::runtime_error if the bound cannot reach arg.tol within 400 terms.
MLValue ml_series(const MLArg& arg);

enum class OscKind : std::uint8_t { E, I };

// Large-t algebraic tail of the oscillation pair at omega = 1:
//   E kind: sum_{n>=1} (-1)^{n-1} t^{-alpha n} / Gamma(1 - alpha n)
//   I kind: sum_{n>=0} (-1)^n t^{-alpha/2 - alpha n} / Gamma(1 - alpha/2 - alpha n)
// err_estimate is the magnitude of the first nonvanishing omitted term;
// throws std::runtime_error when that bound exceeds tol (t too small for an
// asymptotic evaluation).  Requires 1 < alpha < 2.
MLValue ml_tail(double alpha, OscKind kind, double t, int n_terms, double tol = 1e-3);

// Smallest t at which the optimally truncated tail series (up to max_terms)
// certifies an absolute error below tol.
double tail_threshold(double alpha, OscKind kind, double tol = 1e-10,
                      int max_terms = 8);
// Error bound of the n_terms-truncated tail at the given t.
double tail_error(double alpha, OscKind kind, double t, int n_terms);

// Regime dispatcher: series inside the cancellation-safe disc, closed forms
// for the classical parameter pairs, spectral decomposition or the asymptotic
// tail for the oscillation family (mu in (1,2), nu = 1 or 1 + mu/2, z < 0).
// Throws std::runtime_error when no route certifies arg.tol and
// std::invalid_argument outside the supported parameter region.
MLValue ml_global(const MLArg& arg);

}  // namespace fracosc::ml
