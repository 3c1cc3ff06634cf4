#include "fracosc/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "fracosc/special.hpp"

namespace fracosc::frac {

namespace {
// norms skip the startup layer, where the schemes see the t^alpha-type
// nonsmoothness of the exact solutions head-on
constexpr double WINDOW_FRACTION = 1.0 / 32.0;
}

void GridFunction::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("GridFunction: dt must be positive");
    if (values.size() < 3) throw std::invalid_argument("GridFunction: need at least 3 nodes");
}

GridFunction rl_integral(const GridFunction& f, double beta) {
    f.validate();
    if (!(beta > 0.0 && beta <= 2.0))
        throw std::domain_error("rl_integral: beta must lie in (0, 2]");
    const std::size_t n = f.values.size() - 1;
    GridFunction out{f.dt, std::vector<double>(n + 1, 0.0)};

    // product-trapezoidal weights: exact for piecewise-linear f
    std::vector<double> pw(n + 2);
    for (std::size_t k = 0; k < n + 2; ++k)
        pw[k] = std::pow(static_cast<double>(k), beta + 1.0);
    std::vector<double> a(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m)
        a[m] = pw[m + 1] - 2.0 * pw[m] + pw[m - 1];

    const double scale = std::pow(f.dt, beta) / std::tgamma(beta + 2.0);
    for (std::size_t nn = 1; nn <= n; ++nn) {
        const double dn = static_cast<double>(nn);
        const double c0 = pw[nn - 1] - std::pow(dn, beta) * (dn - beta - 1.0);
        double s = c0 * f.values[0] + f.values[nn];
        for (std::size_t j = 1; j < nn; ++j) s += a[nn - j] * f.values[j];
        out.values[nn] = scale * s;
    }
    return out;
}

GridFunction caputo_derivative(const GridFunction& f, double beta) {
    f.validate();
    if (f.values.size() < 5)
        throw std::invalid_argument("caputo_derivative: grid too short (N < 5)");
    if (!(beta > 0.0 && beta <= 2.0))
        throw std::domain_error("caputo_derivative: beta must lie in (0, 2]");
    const std::size_t n = f.values.size() - 1;
    const double dt = f.dt;

    if (beta == 1.0) {
        GridFunction out{dt, std::vector<double>(n + 1)};
        out.values[0] = (-3.0 * f.values[0] + 4.0 * f.values[1] - f.values[2]) / (2.0 * dt);
        for (std::size_t j = 1; j < n; ++j)
            out.values[j] = (f.values[j + 1] - f.values[j - 1]) / (2.0 * dt);
        out.values[n] = (3.0 * f.values[n] - 4.0 * f.values[n - 1] + f.values[n - 2]) / (2.0 * dt);
        return out;
    }

    if (beta < 1.0) {
        // L1 scheme: power-law weights on first differences; weights on a
        // constant sum to zero by construction.
        GridFunction out{dt, std::vector<double>(n + 1, 0.0)};
        std::vector<double> b(n);
        for (std::size_t j = 0; j < n; ++j)
            b[j] = std::pow(static_cast<double>(j + 1), 1.0 - beta) -
                   std::pow(static_cast<double>(j), 1.0 - beta);
        const double scale = std::pow(dt, -beta) / std::tgamma(2.0 - beta);
        for (std::size_t nn = 1; nn <= n; ++nn) {
            double s = 0.0;
            for (std::size_t j = 0; j < nn; ++j)
                s += b[nn - 1 - j] * (f.values[j + 1] - f.values[j]);
            out.values[nn] = scale * s;
        }
        return out;
    }

    // 1 < beta <= 2: second differences, one-sided at both ends
    GridFunction d2{dt, std::vector<double>(n + 1)};
    for (std::size_t j = 1; j < n; ++j)
        d2.values[j] = (f.values[j + 1] - 2.0 * f.values[j] + f.values[j - 1]) / (dt * dt);
    d2.values[0] = (f.values[2] - 2.0 * f.values[1] + f.values[0]) / (dt * dt);
    d2.values[n] = (f.values[n] - 2.0 * f.values[n - 1] + f.values[n - 2]) / (dt * dt);
    if (beta == 2.0) return d2;
    return rl_integral(d2, 2.0 - beta);
}

GridFunction sample_oscillation(OscKind kind, double alpha, double horizon, int n) {
    if (n < 2) throw std::invalid_argument("sample_oscillation: n too small");
    const osc::OscParams p{alpha, 1.0, 1.0, 1.0};
    GridFunction g{horizon / n, std::vector<double>(n + 1)};
    for (int j = 0; j <= n; ++j) {
        const double t = g.dt * j;
        g.values[j] = (kind == OscKind::E) ? osc::e_alpha(p, t).value : osc::i_alpha(p, t).value;
    }
    return g;
}

namespace {

ResidualReport make_report(GridFunction residual, double horizon, double expected) {
    ResidualReport rep;
    rep.window_start = horizon * WINDOW_FRACTION;
    rep.expected_order = expected;
    double sup = 0.0, l2 = 0.0;
    for (std::size_t j = 0; j < residual.values.size(); ++j) {
        if (residual.t_at(j) < rep.window_start) continue;
        const double r = std::fabs(residual.values[j]);
        sup = std::max(sup, r);
        l2 += r * r;
    }
    rep.sup_norm = sup;
    rep.l2_norm = std::sqrt(l2 * residual.dt);
    rep.grid = std::move(residual);
    return rep;
}

GridFunction combine(const GridFunction& a, double ca, const GridFunction& b, double cb,
                     double shift) {
    GridFunction out{a.dt, std::vector<double>(a.values.size())};
    for (std::size_t j = 0; j < a.values.size(); ++j)
        out.values[j] = ca * a.values[j] + cb * b.values[j] + shift;
    return out;
}

}  // namespace

ResidualReport residual_eq2(double alpha, double horizon, int n) {
    if (n < 64) throw std::invalid_argument("residual_eq2: n must be at least 64");
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw std::domain_error("residual_eq2: alpha must lie in [1, 2]");
    const GridFunction e = sample_oscillation(OscKind::E, alpha, horizon, n);
    const GridFunction je = rl_integral(e, alpha);
    return make_report(combine(e, 1.0, je, 1.0, -1.0), horizon, 2.0);
}

ResidualReport residual_eq3(OscKind kind, double alpha, double horizon, int n) {
    if (n < 64) throw std::invalid_argument("residual_eq3: n must be at least 64");
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw std::domain_error("residual_eq3: alpha must lie in [1, 2]");
    const GridFunction u = sample_oscillation(kind, alpha, horizon, n);
    const GridFunction du = caputo_derivative(u, alpha);
    double expected;
    if (alpha == 2.0) expected = 2.0;
    else if (kind == OscKind::E) expected = alpha - 1.0;
    else expected = 0.5 * alpha - 1.0;  // i'' not integrable at 0: diverges
    return make_report(combine(du, 1.0, u, 1.0, 0.0), horizon, expected);
}

ResidualReport residual_eq4(double alpha, double horizon, int n) {
    if (n < 64) throw std::invalid_argument("residual_eq4: n must be at least 64");
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw std::domain_error("residual_eq4: alpha must lie in [1, 2]");
    const GridFunction i = sample_oscillation(OscKind::I, alpha, horizon, n);
    const GridFunction di = caputo_derivative(i, 0.5 * alpha);
    const GridFunction ji = rl_integral(i, 0.5 * alpha);
    const double expected = (alpha == 2.0) ? 2.0 : 2.0 - 0.5 * alpha;
    return make_report(combine(di, 1.0, ji, 1.0, -1.0), horizon, expected);
}

DualityReport duality_check(double alpha, double horizon, int n) {
    if (n < 64) throw std::invalid_argument("duality_check: n must be at least 64");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::domain_error("duality_check: alpha must lie in (1, 2]");
    const GridFunction e = sample_oscillation(OscKind::E, alpha, horizon, n);
    const GridFunction i = sample_oscillation(OscKind::I, alpha, horizon, n);
    const double half = 0.5 * alpha;
    const bool classical = alpha == 2.0;  // D sin = cos, J cos = sin, ...
    DualityReport rep;
    rep.d_e = make_report(combine(caputo_derivative(e, half), 1.0, i, 1.0, 0.0),
                          horizon, 2.0 - (classical ? 0.0 : half));
    rep.d_i = make_report(combine(caputo_derivative(i, half), 1.0, e, -1.0, 0.0),
                          horizon, 2.0 - (classical ? 0.0 : half));
    rep.j_e = make_report(combine(rl_integral(e, half), 1.0, i, -1.0, 0.0), horizon, 2.0);
    rep.j_i = make_report(combine(rl_integral(i, half), 1.0, e, 1.0, -1.0),
                          horizon, classical ? 2.0 : 1.0 + half);
    return rep;
}

HamiltonReport hamilton_residual(const osc::OscParams& p, double horizon, int n) {
    p.validate();
    if (n < 64) throw std::invalid_argument("hamilton_residual: n must be at least 64");
    GridFunction q{horizon / n, std::vector<double>(n + 1)};
    GridFunction pm{horizon / n, std::vector<double>(n + 1)};
    for (int j = 0; j <= n; ++j) {
        const double t = q.dt * j;
        q.values[j] = p.q0 * osc::e_alpha(p, t).value;
        pm.values[j] = osc::momentum(p, t);
    }
    const double half = 0.5 * p.alpha;
    const double expected = (p.alpha == 2.0) ? 2.0 : 2.0 - half;
    HamiltonReport rep;
    rep.q_eq = make_report(combine(caputo_derivative(q, half), 1.0, pm, -1.0 / p.m, 0.0),
                           horizon, expected);
    rep.p_eq = make_report(combine(caputo_derivative(pm, half), 1.0, q,
                                   p.m * p.omega * p.omega, 0.0),
                           horizon, expected);
    return rep;
}

}  // namespace fracosc::frac
