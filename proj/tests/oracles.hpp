#pragma once

// Test-side oracles, independent of the library's evaluation paths:
//  - long-double direct summation of the defining power series
//  - Romberg quadrature for the Dawson integral
//  - term-wise fractional-integral image of a power series
//  - frozen reference values computed offline with 50-digit arithmetic
//    (series summation / product formulas / adaptive quadrature at 1e-15).

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// E_{mu,nu}(z) by direct long-double summation with std::lgamma terms.
inline long double ml_series_ld(long double mu, long double nu, long double z,
                                int kmax = 300) {
    long double sum = 0.0L;
    long double zk = 1.0L;
    for (int k = 0; k < kmax; ++k) {
        const long double a = mu * k + nu;
        const long double g = std::lgamma(a);
        const long double term = zk * std::exp(-g);
        sum += term;
        zk *= z;
        if (k > 8 && std::fabs(term) < 1e-24L && std::fabs(zk) * std::exp(-std::lgamma(a + mu)) < 1e-24L)
            break;
    }
    return sum;
}

inline double e_alpha_series(double alpha, double t) {
    if (t == 0.0) return 1.0;
    return static_cast<double>(
        ml_series_ld(alpha, 1.0L, -std::pow(static_cast<long double>(t), alpha)));
}

inline double i_alpha_series(double alpha, double t) {
    if (t == 0.0) return 0.0;
    const long double tl = t;
    return static_cast<double>(
        std::pow(tl, 0.5L * alpha) *
        ml_series_ld(alpha, 1.0L + 0.5L * alpha, -std::pow(tl, alpha)));
}

// Romberg integration of a smooth integrand on [a, b].
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int levels = 18) {
    std::vector<double> prev, cur;
    double h = b - a;
    prev.push_back(0.5 * h * (f(a) + f(b)));
    for (int k = 1; k < levels; ++k) {
        h *= 0.5;
        double s = 0.0;
        const long n = 1L << k;
        for (long i = 1; i < n; i += 2) s += f(a + i * h);
        cur.assign(1, 0.5 * prev[0] + h * s);
        double p4 = 4.0;
        for (std::size_t j = 1; j <= prev.size(); ++j) {
            cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (p4 - 1.0));
            p4 *= 4.0;
        }
        if (k > 4 && std::fabs(cur.back() - prev.back()) < 1e-15 * (1.0 + std::fabs(cur.back())))
            return cur.back();
        prev = cur;
    }
    return prev.back();
}

// Dawson integral via its definition, exp(-x^2) int_0^x exp(y^2) dy.
inline double dawson_quadrature(double x) {
    if (x == 0.0) return 0.0;
    const double integral = romberg([](double y) { return std::exp(y * y); }, 0.0, x);
    return std::exp(-x * x) * integral;
}

// A finite power series sum_k c_k t^{p_k}; J^beta maps each term to
// c_k Gamma(p_k+1)/Gamma(p_k+beta+1) t^{p_k+beta} (exact image of the
// fractional integral on powers).
struct PowerSeries {
    std::vector<long double> coeff;
    std::vector<long double> expo;

    PowerSeries applied_J(long double beta) const {
        PowerSeries out;
        out.coeff.reserve(coeff.size());
        out.expo.reserve(expo.size());
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            const long double ratio =
                std::exp(std::lgamma(expo[k] + 1.0L) - std::lgamma(expo[k] + beta + 1.0L));
            out.coeff.push_back(coeff[k] * ratio);
            out.expo.push_back(expo[k] + beta);
        }
        return out;
    }

    double eval(double t) const {
        long double s = 0.0L;
        for (std::size_t k = 0; k < coeff.size(); ++k)
            s += coeff[k] * std::pow(static_cast<long double>(t), expo[k]);
        return static_cast<double>(s);
    }
};

// truncated series of e_alpha (omega = 1): sum (-1)^k t^{alpha k}/Gamma(alpha k + 1)
inline PowerSeries e_series_terms(double alpha, int n_terms) {
    PowerSeries s;
    for (int k = 0; k < n_terms; ++k) {
        const long double p = static_cast<long double>(alpha) * k;
        s.coeff.push_back((k % 2 ? -1.0L : 1.0L) * std::exp(-std::lgamma(p + 1.0L)));
        s.expo.push_back(p);
    }
    return s;
}

// truncated series of i_alpha: sum (-1)^k t^{alpha k + alpha/2}/Gamma(alpha k + alpha/2 + 1)
inline PowerSeries i_series_terms(double alpha, int n_terms) {
    PowerSeries s;
    for (int k = 0; k < n_terms; ++k) {
        const long double p = static_cast<long double>(alpha) * k + 0.5L * alpha;
        s.coeff.push_back((k % 2 ? -1.0L : 1.0L) * std::exp(-std::lgamma(p + 1.0L)));
        s.expo.push_back(p);
    }
    return s;
}

// ---- frozen 50-digit reference values ----
namespace ref {

inline constexpr double gamma_m08 = -5.738554639998503816506;
inline constexpr double gamma_half = 1.7724538509055160272981;
inline constexpr double dawson_05 = 0.42443638350202229593402;
inline constexpr double dawson_1 = 0.53807950691276841913638;
inline constexpr double dawson_2 = 0.30134038892379196603466;
inline constexpr double dawson_10 = 0.050253847187598528032750;
inline constexpr double dawson_20 = 0.025031367926403671946990;
inline constexpr double erfi_1 = 1.6504257587975428760253;
inline constexpr double erfi_2 = 18.564802414575552598704;
inline constexpr double erfi_5 = 8298273880.6768035161460;

inline constexpr double E_15_1_m1 = 0.39662936531808808449161;   // E_{1.5,1}(-1)
inline constexpr double E_18_1_m1 = 0.47422447070445634884730;   // E_{1.8,1}(-1)
inline constexpr double E_18_1_m4 = -0.42478976004321821444513;  // E_{1.8,1}(-4)
inline constexpr double E_18_19_m4 = 0.34079482419801263791212;  // E_{1.8,1.9}(-4)
inline constexpr double E_12_1_m5 = -0.072960176305759224764087; // E_{1.2,1}(-5)
inline constexpr double E_15_25_m33 = 0.36786374370160537800990; // E_{1.5,2.5}(-3.3)
inline constexpr double E_1_15_m2 = 0.36107460526458845942012;   // E_{1,1.5}(-2)

inline constexpr double e_18_025 = 0.95131434927478416931813;
inline constexpr double i_18_025 = 0.29294964759442404760914;
inline constexpr double e_18_1 = 0.47422447070445634884730;
inline constexpr double i_18_1 = 0.81832143676063298631542;
inline constexpr double e_18_2 = -0.32813042514896125780786;
inline constexpr double i_18_2 = 0.75770763184033918470171;
inline constexpr double e_18_5 = 0.090523784801567279249427;
inline constexpr double i_18_5 = -0.43482890013010340675528;
inline constexpr double e_18_10 = -0.18095876512880011240072;
inline constexpr double i_18_10 = -0.067856557818601818811191;
inline constexpr double e_18_20 = 0.022067984546615958281472;
inline constexpr double i_18_20 = 0.032794867035948057208915;
inline constexpr double e_15_1 = 0.39662936531808808449161;
inline constexpr double i_15_1 = 0.75098871884687023333473;
inline constexpr double e_15_2 = -0.14936389502406369011126;
inline constexpr double i_15_2 = 0.60044422113067380374307;
inline constexpr double e_15_5 = -0.064447308950367077339032;
inline constexpr double i_15_5 = -0.026665697005852363783290;
inline constexpr double e_15_10 = -0.015300515030893151223562;
inline constexpr double i_15_10 = 0.053706577536884701930731;
inline constexpr double e_15_50 = -0.00079780087584332394803585;
inline constexpr double i_15_50 = 0.014629918922326857401501;
inline constexpr double e_12_1 = 0.36351260195051890726025;
inline constexpr double i_12_1 = 0.66241016827513073759630;
inline constexpr double i_1_at_1 = 0.60715770584139372911503;    // exp(-1) erfi(1)
inline constexpr double i_1_at_400 = 0.028244874092056703036076;
inline constexpr double E_199_1_mpipow = -0.98099854389567543638478;  // E_{1.99,1}(-pi^1.99)
inline constexpr double i_199_pi = 0.0012636010757849824555094;

// branch-cut parts from 1e-25 quadrature of e^{-rt} K / V
inline constexpr double f_18_1 = -0.042294733521157354418890;
inline constexpr double h_18_1 = 0.040151454526008464886041;
inline constexpr double f_15_2 = -0.070609962107692609474741;
inline constexpr double h_15_2 = 0.11630180702350721715447;
inline constexpr double f_12_025 = -0.49215122654985521675811;
inline constexpr double h_12_025 = 0.27313321541117929162859;

// largest roots of the near-alpha=1 balance equation (log-form bisection)
inline constexpr double T_eq8_005 = 1.31149847036226;
inline constexpr double T_eq8_01 = 1.15904665844301;
inline constexpr double T_eq8_02 = 0.657192487062006;

}  // namespace ref

}  // namespace oracle
