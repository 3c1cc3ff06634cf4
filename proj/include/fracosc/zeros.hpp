#pragma once

#include <vector>

#include "fracosc/oscillation.hpp"

namespace fracosc::zeros {

using ml::OscKind;

struct ZeroReport {
    OscKind kind = OscKind::E;
    double alpha = 0.0;
    std::vector<double> zeros;           // strictly increasing, t > 0 only
    bool trivial_zero_at_origin = false; // I kind: i_alpha(0) = 0, reported apart
    long scan_points = 0;
    double refine_tol = 0.0;
    double t_max = 0.0;

    // Finiteness certificate: beyond t_max the algebraic tail strictly
    // dominates the residue envelope by a factor >= 10, so no further sign
    // change is possible.  Both sides are recorded at t_max and 2 t_max.
    double tail_bound_at_tmax = 0.0;
    double envelope_at_tmax = 0.0;
    double tail_bound_at_2tmax = 0.0;
    double envelope_at_2tmax = 0.0;
};

// Scan step pi/(8 sin(pi/alpha)) (an eighth of the residue half-period) from
// t = 1e-6 to the dominance horizon; sign changes refined by bisection to
// refine_tol.  Requires 1 < alpha < 2.
ZeroReport find_zeros(OscKind kind, double alpha, double refine_tol = 1e-9);

// Upper bound pi / sin(pi/alpha) on the smallest zero of e_alpha.
double smallest_zero_bound(double alpha);

// Largest-zero balance near alpha = 1 + eps: solves
//   exp(-T) = (1+eps) T^{-1/2-eps/2} / (2 Gamma(1/2+eps/2))
// for its largest root by damped Newton on the log form, 0 < eps <= 0.3.
// Throws std::runtime_error if 100 iterations do not converge (the balance
// has no real root once eps grows past ~0.29).
double largest_zero_near1(double eps);

// Near alpha = 2 - delta: T ~ (8/(pi delta)) ln(2/delta), 0 < delta <= 0.3.
double largest_zero_near2(double delta);

// Approximate inverse map: delta ~ (8/pi) ln(T)/T, T >= 10.
double delta_of_T(double T);

// Zero-count estimate N ~ T/pi for alpha in (1.7, 2).
double zero_count_estimate(double alpha);

}  // namespace fracosc::zeros
