#pragma once

#include <cstdint>
#include <vector>

#include "fracosc/oscillation.hpp"
#include "fracosc/rng.hpp"

namespace fracosc::sub {

// One draw from the standard one-sided beta-stable law with Laplace transform
// exp(-s^beta), 0 < beta < 1, by Kanter's two-uniform construction (evaluated
// in log form so it stays finite for beta arbitrarily close to 1).
double sample_stable_increment(double beta, CounterRng& rng);

// Discretized stable subordinator: physical time U(k * tau_step) sampled at
// uniform operational-time steps.  u_values[0] = 0, strictly increasing.
struct SubordinatorPath {
    double beta = 0.5;
    double tau_step = 1e-3;
    std::vector<double> u_values;
};

// Fresh path whose horizon covers t_target (extended on demand).
SubordinatorPath make_path(double beta, double tau_step, double t_target,
                           CounterRng& rng);
void extend_path(SubordinatorPath& path, double t_target, CounterRng& rng);

// Inverse hitting time S(t) = inf{tau : U(tau) > t}, linearly interpolated in
// the operational coordinate between the bracketing staircase steps.
// Throws std::out_of_range when t exceeds the path horizon.
double inverse_hitting_time(const SubordinatorPath& path, double t);

struct MCEstimate {
    std::vector<double> t_grid;
    std::vector<double> a_hat;      // mean of cos(omega S_i(t))  -> e_alpha
    std::vector<double> b_hat;      // mean of sin(omega S_i(t))  -> i_alpha
    std::vector<double> std_err_a;  // sample std / sqrt(n_paths), per point
    std::vector<double> std_err_b;
    long n_paths = 0;
    std::uint64_t seed = 0;
};

struct MCOptions {
    // Operational step: tau_step = t_max^{alpha/2} / steps_per_horizon, so the
    // median staircase has at least that many steps over the horizon.
    int steps_per_horizon = 2000;
    int threads = 0;  // 0: FRACOSC_THREADS env var, else hardware concurrency
};

// Ensemble average of clock-randomized harmonic motion.  Path i draws from
// the (seed, i) counter stream; the reduction runs over fixed 1024-path
// blocks combined in index order, so a given seed gives bit-identical output
// for any thread count.
MCEstimate mc_oscillation(const osc::OscParams& p, std::vector<double> t_grid,
                          long n_paths, std::uint64_t seed,
                          const MCOptions& opt = {});

// Density p^S(t, tau) of the inverse alpha/2-stable subordinator, the
// Bromwich inversion of s^{alpha/2-1} exp(-tau s^{alpha/2}):
//   alpha = 1: closed form exp(-tau^2/(4t)) / sqrt(pi t)
//   small tau: power series of the self-similar profile
//   else: the Bromwich contour collapsed onto the cut, which yields a
//         positive smooth real integral handled by certified quadrature.
// The machinery self-tests against the alpha = 1 closed form once per t.
// Beyond tau_max (stretched-exponential tail < 1e-12) returns 0.  Throws
// std::runtime_error when the quadrature cannot certify 1e-8.
double ps_density(double alpha, double t, double tau);

// tau beyond which p^S(t, .) is below ~1e-12 and is reported as 0.
double ps_tau_max(double alpha, double t);

// Subordination integrals a = int p^S cos(omega tau) dtau and the sine
// analogue, by adaptive quadrature over the certified support.
std::pair<double, double> quadrature_oscillation(const osc::OscParams& p, double t);

}  // namespace fracosc::sub
