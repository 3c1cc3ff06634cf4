#include "fracosc/zeros.hpp"

#include <cmath>
#include <stdexcept>

#include "fracosc/special.hpp"

namespace fracosc::zeros {

namespace {

double leading_tail(OscKind kind, double alpha, double t) {
    if (kind == OscKind::E)
        return std::fabs(ml::rgamma(1.0 - alpha)) * std::pow(t, -alpha);
    return ml::rgamma(1.0 - 0.5 * alpha) * std::pow(t, -0.5 * alpha);
}

double envelope(double alpha, double t) {
    return (2.0 / alpha) * std::exp(t * std::cos(M_PI / alpha));
}

// smallest t beyond which the algebraic tail dominates the residue envelope
// by the given factor (both sides are monotone in t past the crossing)
double dominance_horizon(OscKind kind, double alpha, double factor) {
    auto dominated = [&](double t) {
        return leading_tail(kind, alpha, t) > factor * envelope(alpha, t);
    };
    double hi = 2.0;
    while (!dominated(hi)) {
        hi *= 2.0;
        if (hi > 1e9) throw std::runtime_error("find_zeros: no dominance horizon found");
    }
    double lo = 0.5 * hi;
    for (int it = 0; it < 60 && hi - lo > 0.01; ++it) {
        const double mid = 0.5 * (lo + hi);
        (dominated(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

ZeroReport find_zeros(OscKind kind, double alpha, double refine_tol) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("find_zeros: alpha must lie strictly in (1,2)");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("find_zeros: refine_tol <= 0");

    const osc::OscParams params{alpha, 1.0, 1.0, 1.0};
    auto fn = [&](double t) {
        return kind == OscKind::E ? osc::e_alpha(params, t).value
                                  : osc::i_alpha(params, t).value;
    };

    ZeroReport rep;
    rep.kind = kind;
    rep.alpha = alpha;
    rep.refine_tol = refine_tol;
    rep.trivial_zero_at_origin = (kind == OscKind::I);
    rep.t_max = dominance_horizon(kind, alpha, 10.0);
    rep.tail_bound_at_tmax = leading_tail(kind, alpha, rep.t_max);
    rep.envelope_at_tmax = envelope(alpha, rep.t_max);
    rep.tail_bound_at_2tmax = leading_tail(kind, alpha, 2.0 * rep.t_max);
    rep.envelope_at_2tmax = envelope(alpha, 2.0 * rep.t_max);

    // an eighth of the residue-part half-period
    const double step = M_PI / (8.0 * std::sin(M_PI / alpha));
    double t_prev = 1e-6;
    double v_prev = fn(t_prev);
    long evals = 1;
    while (t_prev < rep.t_max) {
        const double t_cur = t_prev + step;
        const double v_cur = fn(t_cur);
        ++evals;
        if ((v_cur < 0.0) != (v_prev < 0.0)) {
            double a = t_prev, b = t_cur, va = v_prev;
            int it = 0;
            for (; it < 200 && b - a > refine_tol; ++it) {
                const double m = 0.5 * (a + b);
                const double vm = fn(m);
                ++evals;
                if ((vm < 0.0) == (va < 0.0)) {
                    a = m;
                    va = vm;
                } else {
                    b = m;
                }
            }
            if (b - a > refine_tol)
                throw std::runtime_error("find_zeros: bisection stalled");
            rep.zeros.push_back(0.5 * (a + b));
        }
        t_prev = t_cur;
        v_prev = v_cur;
    }
    rep.scan_points = evals;
    return rep;
}

double smallest_zero_bound(double alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::domain_error("smallest_zero_bound: alpha must lie in (1, 2]");
    return M_PI / std::sin(M_PI / alpha);
}

double largest_zero_near1(double eps) {
    if (!(eps > 0.0 && eps <= 0.3))
        throw std::domain_error("largest_zero_near1: eps must lie in (0, 0.3]");
    // log form of exp(-T) = C T^{-p}:  F(T) = T - p ln T + ln C
    const double p = 0.5 + 0.5 * eps;
    const double logC = std::log1p(eps) - std::log(2.0 * ml::gamma_real(0.5 + 0.5 * eps));
    auto F = [&](double T) { return T - p * std::log(T) + logC; };
    auto dF = [&](double T) { return 1.0 - p / T; };

    double T = -std::log(eps + 0.1) + 3.0;
    for (int it = 0; it < 100; ++it) {
        const double f = F(T);
        if (std::fabs(f) <= 1e-13) return T;
        const double d = dF(T);
        if (d == 0.0) break;
        double lambda = 1.0;
        double T_new = T - f / d;
        // damp: keep the iterate right of the stationary point and decreasing |F|
        for (int h = 0; h < 60; ++h) {
            if (T_new > p && std::fabs(F(T_new)) < std::fabs(f)) break;
            lambda *= 0.5;
            T_new = T - lambda * f / d;
        }
        T = T_new;
    }
    if (std::fabs(F(T)) <= 1e-12) return T;
    throw std::runtime_error(
        "largest_zero_near1: Newton did not converge (no real balance root at this eps)");
}

double largest_zero_near2(double delta) {
    if (!(delta > 0.0 && delta <= 0.3))
        throw std::domain_error("largest_zero_near2: delta must lie in (0, 0.3]");
    return 8.0 / (M_PI * delta) * std::log(2.0 / delta);
}

double delta_of_T(double T) {
    if (!(T >= 10.0)) throw std::domain_error("delta_of_T: T must be at least 10");
    return 8.0 / M_PI * std::log(T) / T;
}

double zero_count_estimate(double alpha) {
    if (!(alpha > 1.7 && alpha < 2.0))
        throw std::domain_error("zero_count_estimate: alpha must lie in (1.7, 2)");
    return largest_zero_near2(2.0 - alpha) / M_PI;
}

}  // namespace fracosc::zeros
