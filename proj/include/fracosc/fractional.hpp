#pragma once

#include <cmath>
#include <vector>

#include "fracosc/mittag_leffler.hpp"
#include "fracosc/oscillation.hpp"

namespace fracosc::frac {

using ml::OscKind;

// Uniform grid on [0, N*dt] with samples at every node.
struct GridFunction {
    double dt = 0.0;
    std::vector<double> values;  // length N+1, node j at t = j*dt

    double horizon() const { return dt * static_cast<double>(values.size() - 1); }
    double t_at(std::size_t j) const { return dt * static_cast<double>(j); }
    void validate() const;  // dt > 0, at least 3 nodes
};

struct ResidualReport {
    double sup_norm = 0.0;       // over t >= window_start
    double l2_norm = 0.0;        // sqrt(dt * sum r^2) over the same window
    GridFunction grid;           // full pointwise residual
    double expected_order = 0.0; // theoretical refinement order of the scheme
    double window_start = 0.0;   // norms exclude the startup layer t < window_start
};

// Riemann-Liouville fractional integral J^beta on a uniform grid by the
// product-trapezoidal rule (exact for piecewise-linear data), 0 < beta <= 2.
GridFunction rl_integral(const GridFunction& f, double beta);

// Caputo derivative on a uniform grid, 0 < beta <= 2.
//   beta in (0,1): L1 scheme (order 2-beta on smooth data)
//   beta = 1     : central differences, one-sided at the ends
//   beta in (1,2): second differences composed with J^{2-beta}
//   beta = 2     : second differences
GridFunction caputo_derivative(const GridFunction& f, double beta);

// Sample e_alpha or i_alpha (omega = 1) on n+1 nodes covering [0, horizon].
GridFunction sample_oscillation(OscKind kind, double alpha, double horizon, int n);

// Residual of e = 1 - J^alpha e.
ResidualReport residual_eq2(double alpha, double horizon, int n);

// Residual of D^alpha u + u = 0 with u = e_alpha or i_alpha.  For the I kind
// with 1 < alpha < 2 the second derivative of i_alpha is not integrable at the
// origin and the discrete residual diverges at rate alpha/2 - 1; the report's
// expected_order records that.
ResidualReport residual_eq3(OscKind kind, double alpha, double horizon, int n);

// Residual of D^{alpha/2} i + J^{alpha/2} i = 1.
ResidualReport residual_eq4(double alpha, double horizon, int n);

struct DualityReport {
    ResidualReport d_e;  // D^{alpha/2} e + i       = 0
    ResidualReport d_i;  // D^{alpha/2} i - e       = 0
    ResidualReport j_e;  // J^{alpha/2} e - i       = 0
    ResidualReport j_i;  // J^{alpha/2} i - (1 - e) = 0
};

// The four half-order identities; the reference side of each is the series
// evaluation, so each report isolates one discrete operator's error.
DualityReport duality_check(double alpha, double horizon, int n);

struct HamiltonReport {
    ResidualReport q_eq;  // D^{alpha/2} q - p/m       = 0
    ResidualReport p_eq;  // D^{alpha/2} p + m w^2 q   = 0
};

// Hamilton pair along the trajectory q = q0 e_alpha, p from the momentum op.
HamiltonReport hamilton_residual(const osc::OscParams& p, double horizon, int n);

// log2(sup_at_n / sup_at_2n) for any residual producer.
template <typename F>
double refinement_order(F&& produce, int n) {
    const double s1 = produce(n).sup_norm;
    const double s2 = produce(2 * n).sup_norm;
    return std::log2(s1 / s2);
}

}  // namespace fracosc::frac
