#include "fracosc/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fracosc/quadrature.hpp"
#include "fracosc/special.hpp"

namespace fracosc::sub {

double sample_stable_increment(double beta, CounterRng& rng) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::domain_error("sample_stable_increment: beta must lie in (0,1)");
    // Kanter: X = (A(U)/W)^{(1-beta)/beta} has Laplace transform exp(-s^beta);
    // the log form keeps every factor finite as beta -> 1.
    const double u = rng.next_uniform();
    const double w = -std::log(rng.next_uniform());
    const double pu = M_PI * u;
    const double ratio = (1.0 - beta) / beta;
    const double ln_x = ratio * std::log(std::sin((1.0 - beta) * pu)) +
                        std::log(std::sin(beta * pu)) -
                        std::log(std::sin(pu)) / beta - ratio * std::log(w);
    return std::exp(ln_x);
}

SubordinatorPath make_path(double beta, double tau_step, double t_target, CounterRng& rng) {
    if (!(tau_step > 0.0)) throw std::invalid_argument("make_path: tau_step must be positive");
    SubordinatorPath path{beta, tau_step, {0.0}};
    extend_path(path, t_target, rng);
    return path;
}

void extend_path(SubordinatorPath& path, double t_target, CounterRng& rng) {
    const double scale = std::pow(path.tau_step, 1.0 / path.beta);
    while (path.u_values.back() <= t_target)
        path.u_values.push_back(path.u_values.back() +
                                scale * sample_stable_increment(path.beta, rng));
}

double inverse_hitting_time(const SubordinatorPath& path, double t) {
    if (!(t >= 0.0)) throw std::domain_error("inverse_hitting_time: t must be nonnegative");
    if (t == 0.0) return 0.0;
    if (t >= path.u_values.back())
        throw std::out_of_range("inverse_hitting_time: t beyond the path horizon");
    const auto it = std::upper_bound(path.u_values.begin(), path.u_values.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - path.u_values.begin());
    const double u_lo = path.u_values[k - 1];
    const double u_hi = path.u_values[k];
    return path.tau_step * (static_cast<double>(k - 1) + (t - u_lo) / (u_hi - u_lo));
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FRACOSC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

struct BlockSums {
    std::vector<double> c, s, c2, s2;
    explicit BlockSums(std::size_t n) : c(n, 0.0), s(n, 0.0), c2(n, 0.0), s2(n, 0.0) {}
};

}  // namespace

MCEstimate mc_oscillation(const osc::OscParams& p, std::vector<double> t_grid,
                          long n_paths, std::uint64_t seed, const MCOptions& opt) {
    p.validate();
    if (p.alpha >= 2.0)
        throw std::domain_error("mc_oscillation: alpha = 2 (beta = 1) is not sampled");
    if (n_paths < 100) throw std::invalid_argument("mc_oscillation: need n_paths >= 100");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("mc_oscillation: t_grid must be sorted");
    if (!t_grid.empty() && t_grid.front() < 0.0)
        throw std::invalid_argument("mc_oscillation: negative time");

    const double beta = 0.5 * p.alpha;
    const double t_max = t_grid.empty() ? 0.0 : t_grid.back();
    const double tau_step =
        t_max > 0.0 ? std::pow(t_max, beta) / opt.steps_per_horizon : 1e-3;
    const double scale = std::pow(tau_step, 1.0 / beta);
    const std::size_t npts = t_grid.size();

    constexpr long BLOCK = 1024;
    const long n_blocks = (n_paths + BLOCK - 1) / BLOCK;
    std::vector<BlockSums> blocks(static_cast<std::size_t>(n_blocks), BlockSums(npts));

    auto run_block = [&](long bi) {
        BlockSums& acc = blocks[static_cast<std::size_t>(bi)];
        const long lo = bi * BLOCK;
        const long hi = std::min(n_paths, lo + BLOCK);
        for (long i = lo; i < hi; ++i) {
            CounterRng rng(seed, static_cast<std::uint64_t>(i));
            // walk the staircase once per path, visiting grid times in order
            long k = 0;
            double u_prev = 0.0, u = 0.0;
            for (std::size_t j = 0; j < npts; ++j) {
                const double t = t_grid[j];
                double cs, sn;
                if (t == 0.0) {
                    cs = 1.0;
                    sn = 0.0;
                } else {
                    while (u <= t) {
                        u_prev = u;
                        u += scale * sample_stable_increment(beta, rng);
                        ++k;
                    }
                    const double st = tau_step *
                        (static_cast<double>(k - 1) + (t - u_prev) / (u - u_prev));
                    cs = std::cos(p.omega * st);
                    sn = std::sin(p.omega * st);
                }
                acc.c[j] += cs;
                acc.s[j] += sn;
                acc.c2[j] += cs * cs;
                acc.s2[j] += sn * sn;
            }
        }
    };

    const int n_threads = resolve_threads(opt.threads);
    if (n_threads <= 1 || n_blocks <= 1) {
        for (long bi = 0; bi < n_blocks; ++bi) run_block(bi);
    } else {
        std::vector<std::future<void>> workers;
        workers.reserve(static_cast<std::size_t>(n_threads));
        for (int w = 0; w < n_threads; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (long bi = w; bi < n_blocks; bi += n_threads) run_block(bi);
            }));
        }
        for (auto& f : workers) f.get();
    }

    // fixed-order reduction: identical output for every thread count
    MCEstimate est;
    est.t_grid = std::move(t_grid);
    est.n_paths = n_paths;
    est.seed = seed;
    est.a_hat.resize(npts);
    est.b_hat.resize(npts);
    est.std_err_a.resize(npts);
    est.std_err_b.resize(npts);
    const double n = static_cast<double>(n_paths);
    for (std::size_t j = 0; j < npts; ++j) {
        double sc = 0.0, ss = 0.0, sc2 = 0.0, ss2 = 0.0;
        for (const BlockSums& b : blocks) {
            sc += b.c[j];
            ss += b.s[j];
            sc2 += b.c2[j];
            ss2 += b.s2[j];
        }
        est.a_hat[j] = sc / n;
        est.b_hat[j] = ss / n;
        const double var_c = std::max(0.0, (sc2 - sc * sc / n) / (n - 1.0));
        const double var_s = std::max(0.0, (ss2 - ss * ss / n) / (n - 1.0));
        est.std_err_a[j] = std::sqrt(var_c / n);
        est.std_err_b[j] = std::sqrt(var_s / n);
    }
    return est;
}

// ---------------------------------------------------------------------------
// subordinator density and the subordination integrals

double ps_tau_max(double alpha, double t) {
    const double beta = 0.5 * alpha;
    // stretched-exponential tail of the density profile:
    // Phi(u) ~ exp(-(1-beta) beta^{beta/(1-beta)} u^{1/(1-beta)});
    // cut where the exponent passes 38 (tail mass < 1e-13)
    const double c = (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
    return std::pow(38.0 / c, 1.0 - beta) * std::pow(t, beta);
}

namespace {

// Profile Phi(u) of the self-similar density p^S(t, tau) = t^{-beta} Phi(tau t^{-beta}).
//
// Small u: the power series sum_k (-u)^k / (k! Gamma(1 - beta(k+1))).  For beta
// exactly representable as a small binary rational (beta = 3/4 hits this) the
// series drops the terms whose Gamma argument lands on a pole and misses an
// exponentially small component of the density; the deviation stays below
// ~1e-14 for u <= 0.5, which is where the series is used.
double profile_series(double beta, double u) {
    double sum = 0.0;
    double uk = 1.0;   // (-u)^k / k!
    for (int k = 0; k < 220; ++k) {
        if (k > 0) uk *= -u / k;
        sum += uk * ml::rgamma(1.0 - beta * (k + 1));
        if (k > 8 && std::fabs(uk) * std::exp(std::lgamma(beta * (k + 2))) / M_PI < 1e-18)
            break;
    }
    return sum;
}

// Larger u: the Bromwich integral deformed onto the cut gives the positive
// real-integral form (the same A(phi) as in Kanter's sampler):
//   Phi(u) = u^{beta/(1-beta)} / ((1-beta) pi) *
//            int_0^pi A(phi) exp(-A(phi) u^{1/(1-beta)}) dphi.
// Every factor is evaluated in log form; the integrand is positive and
// smooth, so the adaptive rule certifies an honest bound.
double profile_integral(double beta, double u, double abs_tol, double* err_out) {
    const double q = 1.0 / (1.0 - beta);
    const double y = std::pow(u, q);
    auto log_a = [&](double phi) {
        return (beta * q) * std::log(std::sin(beta * phi)) +
               std::log(std::sin((1.0 - beta) * phi)) - q * std::log(std::sin(phi));
    };
    auto integrand = [&](double phi) {
        if (phi <= 0.0 || phi >= M_PI) return 0.0;
        const double ln_a = log_a(phi);
        if (ln_a > 690.0) return 0.0;
        return std::exp(ln_a - std::exp(ln_a) * y);
    };
    // A is monotone increasing on (0, pi); the integrand peaks where
    // A ~ 1/y and the peak narrows as beta -> 1, so panel edges are pinned
    // to fixed A-levels around it by bisection on log A.
    auto phi_at = [&](double target_ln_a) {
        double lo = 1e-12, hi = M_PI - 1e-12;
        if (log_a(lo) >= target_ln_a) return lo;
        if (log_a(hi) <= target_ln_a) return hi;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (log_a(mid) < target_ln_a ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<double> pts{0.0, 0.5 * M_PI};
    const double ln_peak = -std::log(y);
    for (double lvl : {-9.0, -4.5, -1.5, 0.0, 1.5, 4.5, 9.0, 30.0})
        pts.push_back(phi_at(ln_peak + lvl));
    pts.push_back(M_PI);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double b) { return b - a < 1e-14; }),
              pts.end());

    const double pref = std::pow(u, beta * q) / ((1.0 - beta) * M_PI);
    const QuadResult r = adaptive_simpson_split(integrand, pts, abs_tol / std::max(pref, 1e-300));
    if (err_out) *err_out = pref * r.err;
    return pref * r.value;
}

// One-shot certification per t: run the same series/integral machinery at
// beta = 1/2 against the closed-form density before general use.
void self_test_at(double t) {
    static std::vector<double> certified;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (double v : certified)
        if (v == t) return;
    const double sqt = std::sqrt(t);
    for (double u : {0.1, 0.4, 0.8, 1.5, 3.0, 6.0}) {
        const double closed = std::exp(-u * u / 4.0) / std::sqrt(M_PI * t);  // tau = u sqrt(t)
        const double profile = u <= 0.5 ? profile_series(0.5, u)
                                        : profile_integral(0.5, u, 1e-12, nullptr);
        if (std::fabs(profile / sqt - closed) > 1e-9)
            throw std::runtime_error("ps_density: self-test against the closed form failed");
    }
    if (certified.size() > 64) certified.clear();
    certified.push_back(t);
}

}  // namespace

double ps_density(double alpha, double t, double tau) {
    if (!(alpha >= 1.0 && alpha < 2.0))
        throw std::domain_error("ps_density: alpha must lie in [1, 2)");
    if (!(t > 0.0)) throw std::domain_error("ps_density: t must be positive");
    if (!(tau >= 0.0)) throw std::domain_error("ps_density: tau must be nonnegative");
    const double beta = 0.5 * alpha;
    if (alpha == 1.0)
        return std::exp(-tau * tau / (4.0 * t)) / std::sqrt(M_PI * t);
    if (tau > ps_tau_max(alpha, t)) return 0.0;  // below the 1e-12 tail bound
    self_test_at(t);
    const double scale = std::pow(t, -beta);
    const double u = tau * scale;
    if (u <= 0.5) return scale * profile_series(beta, u);
    double err = 0.0;
    const double v = scale * profile_integral(beta, u, 1e-11, &err);
    if (scale * err > 1e-8)
        throw std::runtime_error("ps_density: quadrature could not certify 1e-8");
    return v;
}

std::pair<double, double> quadrature_oscillation(const osc::OscParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) throw std::domain_error("quadrature_oscillation: t must be positive");
    if (p.alpha >= 2.0)
        throw std::domain_error("quadrature_oscillation: alpha = 2 is a point mass");

    const double beta = 0.5 * p.alpha;
    const double tmax = ps_tau_max(p.alpha, t);
    const double alpha = p.alpha;
    auto density = [alpha, t](double tau) { return ps_density(alpha, t, tau); };

    // the density peaks near tau = t^beta with width O((1-beta) t^beta);
    // cluster panel edges there so the adaptive error estimate stays sharp
    std::vector<double> pts{0.0};
    const double sc = std::pow(t, beta);
    const double w = 1.0 - beta;
    for (double u : {0.15, 0.4, 0.7, 1.0 - 3.0 * w, 1.0 - w, 1.0, 1.0 + w, 1.0 + 3.0 * w,
                     1.6, 2.2, 3.5, 6.0, 9.0}) {
        const double tau = u * sc;
        if (tau > 0.0 && tau < tmax && tau > pts.back()) pts.push_back(tau);
    }
    pts.push_back(tmax);

    const double tol = (p.alpha == 1.0) ? 1e-9 : 1e-8;
    const QuadResult a = adaptive_simpson_split(
        [&](double tau) { return density(tau) * std::cos(p.omega * tau); }, pts, tol);
    const QuadResult b = adaptive_simpson_split(
        [&](double tau) { return density(tau) * std::sin(p.omega * tau); }, pts, tol);
    if (!(a.err + b.err <= 10.0 * tol))
        throw std::runtime_error("quadrature_oscillation: quadrature failed to certify");
    return {a.value, b.value};
}

}  // namespace fracosc::sub
