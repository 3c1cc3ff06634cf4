#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "fracosc/special.hpp"
#include "fracosc/zeros.hpp"
#include "oracles.hpp"

using namespace fracosc;
using ml::OscKind;
using zeros::ZeroReport;

namespace {

// dense-scan oracle: 10x finer stepping over the same horizon
long dense_scan_count(OscKind kind, double alpha, double t_max) {
    const osc::OscParams p{alpha, 1.0, 1.0, 1.0};
    auto fn = [&](double t) {
        return kind == OscKind::E ? osc::e_alpha(p, t).value : osc::i_alpha(p, t).value;
    };
    const double step = M_PI / (80.0 * std::sin(M_PI / alpha));
    long count = 0;
    double t_prev = 1e-6, v_prev = fn(t_prev);
    while (t_prev < t_max) {
        const double t = t_prev + step;
        const double v = fn(t);
        if ((v < 0.0) != (v_prev < 0.0)) ++count;
        t_prev = t;
        v_prev = v;
    }
    return count;
}

}  // namespace

TEST_CASE("find_zeros: ground-truth counts and locations") {
    // reference zero sets from 1e-13-accurate decomposition plus mp bisection
    const std::map<double, long> e_counts{{1.3, 1}, {1.5, 3}, {1.7, 9}, {1.8, 17}, {1.9, 45}};
    const std::map<double, long> i_counts{{1.3, 0}, {1.5, 2}, {1.7, 4}, {1.8, 10}, {1.9, 28}};
    for (const auto& [alpha, n] : e_counts)
        CHECK(zeros::find_zeros(OscKind::E, alpha).zeros.size() == static_cast<std::size_t>(n));
    for (const auto& [alpha, n] : i_counts) {
        const auto rep = zeros::find_zeros(OscKind::I, alpha);
        CHECK(rep.zeros.size() == static_cast<std::size_t>(n));
        CHECK(rep.trivial_zero_at_origin);
    }

    const auto e15 = zeros::find_zeros(OscKind::E, 1.5, 1e-10);
    REQUIRE(e15.zeros.size() == 3);
    CHECK(e15.zeros[0] == doctest::Approx(1.64522887065).epsilon(1e-8));
    CHECK(e15.zeros[1] == doctest::Approx(5.74370575778).epsilon(1e-8));
    CHECK(e15.zeros[2] == doctest::Approx(8.37646925955).epsilon(1e-8));
    const auto i15 = zeros::find_zeros(OscKind::I, 1.5, 1e-10);
    REQUIRE(i15.zeros.size() == 2);
    CHECK(i15.zeros[0] == doctest::Approx(4.25678541378).epsilon(1e-8));
    CHECK(i15.zeros[1] == doctest::Approx(5.83212202616).epsilon(1e-8));
    const auto e12 = zeros::find_zeros(OscKind::E, 1.2, 1e-10);
    REQUIRE(e12.zeros.size() == 1);
    CHECK(e12.zeros[0] == doctest::Approx(2.1942157239).epsilon(1e-8));
}

TEST_CASE("find_zeros: no positive zeros of i_alpha close to alpha = 1") {
    // the first negative lobe of the residue part is orders of magnitude
    // below the positive branch-cut level there, so i stays positive
    CHECK(zeros::find_zeros(OscKind::I, 1.2).zeros.empty());
    CHECK(zeros::find_zeros(OscKind::I, 1.4).zeros.empty());
}

TEST_CASE("find_zeros: dense-scan oracle confirms the counts") {
    for (double alpha : {1.5, 1.8}) {
        for (OscKind kind : {OscKind::E, OscKind::I}) {
            const auto rep = zeros::find_zeros(kind, alpha);
            CHECK(dense_scan_count(kind, alpha, rep.t_max) ==
                  static_cast<long>(rep.zeros.size()));
        }
    }
}

TEST_CASE("find_zeros: refined zeros carry a sign change within refine_tol") {
    const osc::OscParams p{1.8, 1.0, 1.0, 1.0};
    const auto rep = zeros::find_zeros(OscKind::E, 1.8, 1e-9);
    for (double z : rep.zeros) {
        const double lo = osc::e_alpha(p, z - 1e-9).value;
        const double hi = osc::e_alpha(p, z + 1e-9).value;
        CHECK(((lo < 0.0) != (hi < 0.0)));
    }
}

TEST_CASE("find_zeros: odd counts, monotone counts, smallest-zero bound") {
    long prev_e = -1, prev_i = -1;
    for (double alpha : {1.3, 1.5, 1.7, 1.8, 1.9}) {
        const auto re = zeros::find_zeros(OscKind::E, alpha);
        CHECK(re.zeros.size() % 2 == 1);
        CHECK(re.zeros.front() < zeros::smallest_zero_bound(alpha));
        CHECK(static_cast<long>(re.zeros.size()) >= prev_e);
        prev_e = static_cast<long>(re.zeros.size());
        const auto ri = zeros::find_zeros(OscKind::I, alpha);
        CHECK(static_cast<long>(ri.zeros.size()) >= prev_i);
        prev_i = static_cast<long>(ri.zeros.size());
    }
}

TEST_CASE("find_zeros: finiteness certificate") {
    for (double alpha : {1.5, 1.8}) {
        for (OscKind kind : {OscKind::E, OscKind::I}) {
            const auto rep = zeros::find_zeros(kind, alpha);
            CHECK(rep.tail_bound_at_tmax >= 10.0 * rep.envelope_at_tmax);
            CHECK(rep.tail_bound_at_2tmax >= 10.0 * rep.envelope_at_2tmax);
            if (!rep.zeros.empty()) CHECK(rep.t_max > rep.zeros.back());
        }
    }
}

TEST_CASE("find_zeros: domain") {
    CHECK_THROWS_AS(zeros::find_zeros(OscKind::E, 1.0), std::domain_error);
    CHECK_THROWS_AS(zeros::find_zeros(OscKind::E, 2.0), std::domain_error);
}

TEST_CASE("smallest_zero_bound") {
    CHECK(zeros::smallest_zero_bound(2.0) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(zeros::smallest_zero_bound(1.5) ==
          doctest::Approx(2.0 * M_PI / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(zeros::smallest_zero_bound(1.0001) > 3000.0);  // diverges toward alpha = 1
    CHECK_THROWS_AS(zeros::smallest_zero_bound(1.0), std::domain_error);
}

TEST_CASE("largest_zero_near1: residual, frozen roots, monotone divergence") {
    for (double eps : {0.05, 0.1, 0.2}) {
        const double T = zeros::largest_zero_near1(eps);
        const double p = 0.5 + 0.5 * eps;
        const double C = (1.0 + eps) / (2.0 * ml::gamma_real(0.5 + 0.5 * eps));
        CHECK(std::fabs(T - p * std::log(T) + std::log(C)) <= 1e-12);
        CHECK(std::fabs(std::exp(-T) - C * std::pow(T, -p)) <= 1e-12);
    }
    CHECK(zeros::largest_zero_near1(0.05) == doctest::Approx(oracle::ref::T_eq8_005).epsilon(1e-10));
    CHECK(zeros::largest_zero_near1(0.1) == doctest::Approx(oracle::ref::T_eq8_01).epsilon(1e-10));
    CHECK(zeros::largest_zero_near1(0.2) == doctest::Approx(oracle::ref::T_eq8_02).epsilon(1e-10));
    CHECK(zeros::largest_zero_near1(0.05) > zeros::largest_zero_near1(0.2));
    // the balance has no real root by eps = 0.3: the solver reports it
    CHECK_THROWS_AS(zeros::largest_zero_near1(0.3), std::runtime_error);
    CHECK_THROWS_AS(zeros::largest_zero_near1(0.0), std::domain_error);
}

TEST_CASE("largest_zero_near2 and delta_of_T") {
    CHECK(zeros::largest_zero_near2(0.1) ==
          doctest::Approx(80.0 / M_PI * std::log(20.0)).epsilon(1e-15));
    // the two maps are approximate inverses; the composition approaches the
    // identity from above, logarithmically slowly
    double prev_ratio = 1e9;
    for (double delta : {0.2, 0.1, 0.05, 0.01}) {
        const double T = zeros::largest_zero_near2(delta);
        const double ratio = zeros::delta_of_T(T) / delta;
        CHECK(ratio > 1.0);
        CHECK(ratio < prev_ratio);  // monotone approach toward 1
        prev_ratio = ratio;
    }
    CHECK(prev_ratio < 1.45);
    CHECK_THROWS_AS(zeros::largest_zero_near2(0.5), std::domain_error);
    CHECK_THROWS_AS(zeros::delta_of_T(5.0), std::domain_error);
}

TEST_CASE("zero_count_estimate: formula and monotonicity") {
    CHECK(zeros::zero_count_estimate(1.95) ==
          doctest::Approx(zeros::largest_zero_near2(0.05) / M_PI).epsilon(1e-12));
    CHECK(zeros::zero_count_estimate(1.95) > zeros::zero_count_estimate(1.9));
    CHECK_THROWS_AS(zeros::zero_count_estimate(1.5), std::domain_error);
}

TEST_CASE("zero_count_estimate: within 50% of the true count at alpha = 1.95") {
    const auto rep = zeros::find_zeros(OscKind::I, 1.95, 1e-8);
    const double n_true = static_cast<double>(rep.zeros.size());
    CHECK(n_true == 70);  // frozen ground truth
    CHECK(std::fabs(zeros::zero_count_estimate(1.95) - n_true) / n_true <= 0.5);
    // the delta -> 0 largest-zero law lands within a factor 2 of the truth
    const double ratio = zeros::largest_zero_near2(0.05) / rep.zeros.back();
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
}
