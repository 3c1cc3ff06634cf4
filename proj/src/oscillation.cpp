#include "fracosc/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracosc/quadrature.hpp"
#include "fracosc/special.hpp"

namespace fracosc::osc {

namespace {
constexpr double EPS = std::numeric_limits<double>::epsilon();
}

void OscParams::validate() const {
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw std::invalid_argument("OscParams: alpha must lie in [1, 2]");
    if (!(omega > 0.0)) throw std::invalid_argument("OscParams: omega must be positive");
    if (!(m > 0.0)) throw std::invalid_argument("OscParams: m must be positive");
}

OscSample e_alpha(const OscParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::domain_error("e_alpha: t must be nonnegative");
    if (t == 0.0) return {0.0, 1.0, PartTag::Total, 0.0};
    const double z = -(p.omega * p.omega) * std::pow(t, p.alpha);
    const ml::MLValue v = ml::ml_global({p.alpha, 1.0, z, 1e-10});
    return {t, v.value, PartTag::Total, v.err_estimate};
}

OscSample i_alpha(const OscParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::domain_error("i_alpha: t must be nonnegative");
    if (t == 0.0) return {0.0, 0.0, PartTag::Total, 0.0};
    const double x = (p.omega * p.omega) * std::pow(t, p.alpha);
    const ml::MLValue v = ml::ml_global({p.alpha, 1.0 + 0.5 * p.alpha, -x, 1e-10});
    const double s = p.omega * std::pow(t, 0.5 * p.alpha);
    return {t, s * v.value, PartTag::Total, s * v.err_estimate + 4.0 * EPS};
}

double i_one(double t) {
    if (!(t >= 0.0)) throw std::domain_error("i_one: t must be nonnegative");
    return 2.0 / std::sqrt(M_PI) * ml::dawson(std::sqrt(t));
}

namespace {

// shared denominator (r^alpha + cos(pi alpha))^2 + sin^2(pi alpha)
double kernel_den(double y, double alpha) {
    const double c = ml::cospi(alpha);
    const double s = ml::sinpi(alpha);
    const double u = y + c;
    return u * u + s * s;
}

}  // namespace

double spectral_kernel(KernelKind kind, double alpha, double r) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("spectral_kernel: alpha must lie in (1,2)");
    if (!(r > 0.0)) throw std::domain_error("spectral_kernel: r must be positive");
    const double ra = std::pow(r, alpha);
    const double den = kernel_den(ra, alpha);
    if (kind == KernelKind::K)
        return std::pow(r, alpha - 1.0) * ml::sinpi(alpha) / (M_PI * den);
    return std::pow(r, 0.5 * alpha - 1.0) * (1.0 - ra) * ml::sinpi(0.5 * alpha) / (M_PI * den);
}

double residue_part(OscKind kind, double alpha, double t) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("residue_part: alpha must lie in (1,2)");
    const double damp = (2.0 / alpha) * std::exp(t * std::cos(M_PI / alpha));
    const double phase = t * std::sin(M_PI / alpha);
    return kind == OscKind::E ? damp * std::cos(phase) : damp * std::sin(phase);
}

double branch_cut_part(OscKind kind, double alpha, double t, double tol, double* err_out) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("branch_cut_part: alpha must lie in (1,2)");
    if (!(t > 0.0)) throw std::domain_error("branch_cut_part: t must be positive");

    // (0,1]: substitution r = v^{2/alpha} removes the r^{alpha/2-1} endpoint
    // singularity; the kernel denominator becomes Q(v^2).
    const double pw = 2.0 / alpha;
    std::function<double(double)> left;
    double left_c;
    if (kind == OscKind::E) {
        left_c = 2.0 * ml::sinpi(alpha) / (alpha * M_PI);
        left = [=](double v) {
            return std::exp(-std::pow(v, pw) * t) * v / kernel_den(v * v, alpha);
        };
    } else {
        left_c = 2.0 * ml::sinpi(0.5 * alpha) / (alpha * M_PI);
        left = [=](double v) {
            return std::exp(-std::pow(v, pw) * t) * (1.0 - v * v) / kernel_den(v * v, alpha);
        };
    }
    // for large t the integrand lives on v <~ t^{-alpha/2}; seed breakpoints there
    std::vector<double> lpts{0.0};
    if (t > 1.0) {
        double s = std::pow(t, -0.5 * alpha);
        for (double b : {s, 8.0 * s, 64.0 * s, 512.0 * s})
            if (b < 0.9) lpts.push_back(b);
    } else {
        lpts.push_back(0.5);
    }
    lpts.push_back(1.0);

    // (1,inf): substitution r = 1/u
    std::function<double(double)> right;
    double right_c;
    if (kind == OscKind::E) {
        right_c = ml::sinpi(alpha) / M_PI;
        right = [=](double u) {
            if (u <= 0.0 || t / u > 700.0) return 0.0;
            return std::exp(-t / u) * std::pow(u, alpha - 1.0) / kernel_den(std::pow(u, alpha), alpha);
        };
    } else {
        right_c = ml::sinpi(0.5 * alpha) / M_PI;
        right = [=](double u) {
            if (u <= 0.0 || t / u > 700.0) return 0.0;
            const double num = std::pow(u, 1.5 * alpha - 1.0) - std::pow(u, 0.5 * alpha - 1.0);
            return std::exp(-t / u) * num / kernel_den(std::pow(u, alpha), alpha);
        };
    }
    std::vector<double> rpts{0.0};
    if (t < 4.0) rpts.push_back(std::max(0.05, 0.25 * t));
    else rpts.push_back(0.5);
    rpts.push_back(1.0);

    const double budget = 0.5 * tol;
    const QuadResult l = adaptive_simpson_split(left, lpts, budget / std::max(std::fabs(left_c), 1e-3));
    const QuadResult r = adaptive_simpson_split(right, rpts, budget / std::max(std::fabs(right_c), 1e-3));
    const double err = std::fabs(left_c) * l.err + std::fabs(right_c) * r.err;
    if (!(err <= tol))
        throw std::runtime_error("branch_cut_part: adaptive refinement cannot certify tolerance");
    if (err_out) *err_out = err;
    return left_c * l.value + right_c * r.value;
}

Decomposition decompose(OscKind kind, const OscParams& p, double t) {
    p.validate();
    if (p.omega != 1.0)
        throw std::invalid_argument("decompose: defined for omega = 1; rescale t by omega^{2/alpha}");
    if (!(p.alpha > 1.0 && p.alpha < 2.0))
        throw std::domain_error("decompose: alpha must lie in (1,2)");
    if (!(t > 0.0)) throw std::domain_error("decompose: t must be positive");

    double qerr = 0.0;
    const double cut = branch_cut_part(kind, p.alpha, t, 1e-10, &qerr);
    const double res = residue_part(kind, p.alpha, t);
    const double env = (2.0 / p.alpha) * std::exp(t * std::cos(M_PI / p.alpha));
    return {OscSample{t, cut, PartTag::BranchCut, qerr},
            OscSample{t, res, PartTag::Residue, 8.0 * EPS * env}};
}

double momentum(const OscParams& p, double t) {
    return -p.m * p.q0 * p.omega * i_alpha(p, t).value;
}

double energy(double p_val, double q_val, double omega) {
    return 0.5 * (p_val * p_val + omega * omega * q_val * q_val);
}

}  // namespace fracosc::osc
