#include "fracosc/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracosc/oscillation.hpp"
#include "fracosc/special.hpp"

namespace fracosc::ml {

namespace {
constexpr double EPS = std::numeric_limits<double>::epsilon();
constexpr int MAX_TERMS = 400;
}

void MLArg::validate() const {
    if (!(mu > 0.0) || !(nu > 0.0))
        throw std::invalid_argument("MLArg: mu and nu must be positive");
    if (!std::isfinite(z))
        throw std::invalid_argument("MLArg: non-finite argument");
    if (!(tol >= 10.0 * EPS))
        throw std::invalid_argument("MLArg: tol below 10*eps");
}

double series_radius(double mu) {
    // Cancellation in the alternating sum scales like exp(|z|^{1/mu});
    // capping |z|^{1/mu} at 5^{1/1} keeps the loss under ~1e-12.
    return mu >= 1.0 ? 5.0 : std::pow(5.0, mu);
}

MLValue ml_series(const MLArg& arg) {
    arg.validate();
    if (std::fabs(arg.z) > series_radius(arg.mu))
        throw std::invalid_argument("ml_series: |z| beyond the series radius");

    double sum = 0.0;
    double abs_sum = 0.0;
    double zk = 1.0;  // z^k
    double remainder = std::numeric_limits<double>::infinity();
    bool converged = false;
    int k = 0;
    for (; k < MAX_TERMS; ++k) {
        const double a = arg.mu * k + arg.nu;
        double term;
        if (a <= 171.0) {
            term = zk / std::tgamma(a);
        } else {
            // far tail, magnitude only matters for the stopping test
            const double lg = std::lgamma(a);
            term = (zk < 0.0 ? -1.0 : 1.0) * std::exp(std::log(std::fabs(zk) + 1e-300) - lg);
            if (zk == 0.0) term = 0.0;
        }
        sum += term;
        abs_sum += std::fabs(term);
        zk *= arg.z;

        // geometric remainder bound once the term ratio has dropped below 1/2
        const double a1 = arg.mu * (k + 1) + arg.nu;
        const double ratio = std::fabs(arg.z) * std::exp(std::lgamma(a) - std::lgamma(a1));
        if (ratio < 0.5) {
            const double next = std::fabs(term) * ratio;
            remainder = next / (1.0 - ratio);
            if (remainder < 0.1 * arg.tol) {
                converged = true;
                ++k;
                break;
            }
        }
    }
    const double rounding = 2.0 * EPS * abs_sum * std::max(1.0, std::sqrt(double(k)));
    const double err = remainder + rounding;
    if (!converged || !(err <= arg.tol))
        throw std::runtime_error("ml_series: remainder bound cannot reach tol within " +
                                 std::to_string(MAX_TERMS) + " terms");
    return {sum, err, Method::Series};
}

namespace {

// n-th tail term (1-based for E, 0-based offset handled by caller)
double tail_term(double alpha, OscKind kind, double t, int n) {
    const double p = (kind == OscKind::E) ? alpha * n : alpha * 0.5 + alpha * (n - 1);
    const double g = rgamma(1.0 - p);
    if (g == 0.0) return 0.0;
    const double sgn = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
    return sgn * std::exp(-p * std::log(t)) * g;
}

}  // namespace

double tail_error(double alpha, OscKind kind, double t, int n_terms) {
    // first nonvanishing omitted term (reciprocal-gamma zeros skip a slot)
    const double t1 = std::fabs(tail_term(alpha, kind, t, n_terms + 1));
    const double t2 = std::fabs(tail_term(alpha, kind, t, n_terms + 2));
    return std::max(t1, t2);
}

MLValue ml_tail(double alpha, OscKind kind, double t, int n_terms, double tol) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("ml_tail: alpha must lie in (1,2)");
    if (!(t > 0.0) || n_terms < 1)
        throw std::invalid_argument("ml_tail: need t > 0 and n_terms >= 1");
    double sum = 0.0;
    for (int n = 1; n <= n_terms; ++n) sum += tail_term(alpha, kind, t, n);
    const double err = tail_error(alpha, kind, t, n_terms);
    if (!(err <= tol))
        throw std::runtime_error("ml_tail: first omitted term exceeds tol at this t");
    return {sum, err, Method::Asymptotic};
}

double tail_threshold(double alpha, OscKind kind, double tol, int max_terms) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("tail_threshold: alpha must lie in (1,2)");
    auto best_err = [&](double t) {
        double e = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= max_terms; ++n) e = std::min(e, tail_error(alpha, kind, t, n));
        return e;
    };
    double lo = 1.0, hi = 2.0;
    while (best_err(hi) > tol) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("tail_threshold: no certified t found");
    }
    if (best_err(lo) <= tol) lo = 0.5;
    for (int it = 0; it < 80 && hi - lo > 1e-3 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (best_err(mid) <= tol ? hi : lo) = mid;
    }
    return hi;
}

namespace {

MLValue closed(double v) {
    return {v, 1e-15 * std::max(1.0, std::fabs(v)), Method::ClosedForm};
}

bool near(double a, double b) { return std::fabs(a - b) < 1e-12; }

// Spectral or asymptotic evaluation of the oscillation pair at omega = 1.
MLValue oscillation_eval(double alpha, OscKind kind, double t, double tol) {
    // preferred: truncated tail plus the exact residue part
    double best_tail_err = std::numeric_limits<double>::infinity();
    int best_n = 0;
    for (int n = 1; n <= 8; ++n) {
        const double e = tail_error(alpha, kind, t, n);
        if (e < best_tail_err) { best_tail_err = e; best_n = n; }
    }
    const double res = osc::residue_part(kind, alpha, t);
    const double res_err = 8.0 * EPS * (2.0 / alpha) * std::exp(t * std::cos(M_PI / alpha));
    if (best_tail_err + res_err <= 0.5 * tol) {
        double sum = 0.0;
        for (int n = 1; n <= best_n; ++n) sum += tail_term(alpha, kind, t, n);
        return {sum + res, best_tail_err + res_err, Method::Asymptotic};
    }
    // otherwise certify the branch-cut integral
    double quad_err = 0.0;
    const double target = std::max(std::min(0.5 * tol, 1e-10), 5e-13);
    const double cut = osc::branch_cut_part(kind, alpha, t, target, &quad_err);
    return {cut + res, quad_err + res_err, Method::Spectral};
}

}  // namespace

MLValue ml_global(const MLArg& arg) {
    arg.validate();
    const double z = arg.z;
    const double x = -z;

    // classical closed forms
    if (near(arg.mu, 1.0) && near(arg.nu, 1.0)) return closed(std::exp(z));
    if (near(arg.mu, 2.0) && near(arg.nu, 1.0))
        return closed(z <= 0.0 ? std::cos(std::sqrt(x)) : std::cosh(std::sqrt(z)));
    if (near(arg.mu, 2.0) && near(arg.nu, 2.0)) {
        if (z == 0.0) return closed(1.0);
        return closed(z < 0.0 ? std::sin(std::sqrt(x)) / std::sqrt(x)
                              : std::sinh(std::sqrt(z)) / std::sqrt(z));
    }
    if (near(arg.mu, 1.0) && near(arg.nu, 1.5) && z <= 0.0) {
        if (z == 0.0) return closed(2.0 / std::sqrt(M_PI));
        return closed(2.0 / std::sqrt(M_PI) * dawson(std::sqrt(x)) / std::sqrt(x));
    }

    if (std::fabs(z) <= series_radius(arg.mu)) {
        MLValue v = ml_series(arg);
        if (!(v.err_estimate <= arg.tol))
            throw std::runtime_error("ml_global: series route cannot certify tol");
        return v;
    }

    // oscillation family: mu = alpha in (1,2), nu = 1 or 1 + alpha/2, z < 0
    if (arg.mu > 1.0 && arg.mu < 2.0 && z < 0.0) {
        const double alpha = arg.mu;
        const double t = std::pow(x, 1.0 / alpha);
        if (near(arg.nu, 1.0)) {
            MLValue v = oscillation_eval(alpha, OscKind::E, t, arg.tol);
            if (!(v.err_estimate <= arg.tol))
                throw std::runtime_error("ml_global: spectral route cannot certify tol");
            return v;
        }
        if (near(arg.nu, 1.0 + 0.5 * alpha)) {
            MLValue v = oscillation_eval(alpha, OscKind::I, t, arg.tol);
            const double s = std::sqrt(x);  // t^{alpha/2}
            v.value /= s;
            v.err_estimate /= s;
            if (!(v.err_estimate <= arg.tol))
                throw std::runtime_error("ml_global: spectral route cannot certify tol");
            return v;
        }
    }

    throw std::invalid_argument(
        "ml_global: unsupported (mu, nu, z) region: mu=" + std::to_string(arg.mu) +
        " nu=" + std::to_string(arg.nu) + " z=" + std::to_string(z));
}

}  // namespace fracosc::ml
