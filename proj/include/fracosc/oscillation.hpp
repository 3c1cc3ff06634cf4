#pragma once

#include <cstdint>
#include <utility>

#include "fracosc/mittag_leffler.hpp"

namespace fracosc::osc {

using ml::OscKind;

struct OscParams {
    double alpha;       // fractional order, in [1, 2]
    double omega = 1.0; // circular frequency, > 0
    double m = 1.0;     // generalized mass, > 0
    double q0 = 1.0;    // initial displacement

    void validate() const;
};

enum class PartTag : std::uint8_t { Total, BranchCut, Residue };

struct OscSample {
    double t = 0.0;
    double value = 0.0;
    PartTag part = PartTag::Total;
    double err_estimate = 0.0;
};

// Cosine-type oscillation e_alpha: E_{alpha,1}(-omega^2 t^alpha).  Exactly 1 at t = 0.
OscSample e_alpha(const OscParams& p, double t);

// Sine-type oscillation i_alpha: omega t^{alpha/2} E_{alpha,1+alpha/2}(-omega^2 t^alpha).
// Exactly 0 at t = 0.
OscSample i_alpha(const OscParams& p, double t);

// Closed form of i_1: exp(-t) erfi(sqrt(t)), evaluated overflow-free as
// (2/sqrt(pi)) * dawson(sqrt(t)).
double i_one(double t);

enum class KernelKind : std::uint8_t { K, V };

// Spectral kernels of the branch-cut integrals, 1 < alpha < 2, r > 0:
//   K_alpha(r) = (1/pi) r^{alpha-1} sin(pi alpha) / Q(r^alpha)
//   V_alpha(r) = (1/pi) r^{alpha/2-1} (1 - r^alpha) sin(pi alpha/2) / Q(r^alpha)
// with Q(y) = (y + cos(pi alpha))^2 + sin^2(pi alpha), the cancellation-free
// form of y^2 + 2 y cos(pi alpha) + 1.
double spectral_kernel(KernelKind kind, double alpha, double r);

// Exponentially damped residue parts (the conjugate pole pair):
//   E kind: g_alpha(t) = (2/alpha) e^{t cos(pi/alpha)} cos(t sin(pi/alpha))
//   I kind: q_alpha(t) = (2/alpha) e^{t cos(pi/alpha)} sin(t sin(pi/alpha))
double residue_part(OscKind kind, double alpha, double t);

// Branch-cut part: int_0^inf e^{-rt} * kernel(r) dr, adaptive quadrature with
// a certified absolute error <= tol (throws std::runtime_error otherwise).
// E kind integrates K_alpha, I kind integrates V_alpha.
double branch_cut_part(OscKind kind, double alpha, double t, double tol = 1e-10,
                       double* err_out = nullptr);

struct Decomposition {
    OscSample branch_cut;
    OscSample residue;
};

// Exact split total = branch_cut + residue for omega = 1, 1 < alpha < 2, t > 0.
// Callers with omega != 1 rescale t -> omega^{2/alpha} t first.
Decomposition decompose(OscKind kind, const OscParams& p, double t);

// Generalized momentum along the free trajectory q(t) = q0 e_alpha:
//   p(t) = -m q0 omega^2 t^{alpha/2} E_{alpha,1+alpha/2}(-omega^2 t^alpha)
double momentum(const OscParams& p, double t);

// Oscillator energy (p^2 + omega^2 q^2) / 2.
double energy(double p_val, double q_val, double omega);

}  // namespace fracosc::osc
