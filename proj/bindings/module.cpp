#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracosc/fractional.hpp"
#include "fracosc/mittag_leffler.hpp"
#include "fracosc/oscillation.hpp"
#include "fracosc/special.hpp"
#include "fracosc/subordination.hpp"
#include "fracosc/zeros.hpp"

namespace py = pybind11;
using namespace fracosc;

namespace {

const char* method_name(ml::Method m) {
    switch (m) {
        case ml::Method::Series: return "series";
        case ml::Method::Spectral: return "spectral";
        case ml::Method::Asymptotic: return "asymptotic";
        case ml::Method::ClosedForm: return "closed_form";
    }
    return "?";
}

ml::OscKind parse_kind(const std::string& k) {
    if (k == "e" || k == "E") return ml::OscKind::E;
    if (k == "i" || k == "I") return ml::OscKind::I;
    throw std::invalid_argument("kind must be 'e' or 'i'");
}

}  // namespace

PYBIND11_MODULE(_fracosc, m) {
    m.doc() = "Fractional oscillations: Mittag-Leffler pair, decomposition, "
              "fractional operators, zeros and Monte-Carlo subordination";

    // special functions
    m.def("gamma", &ml::gamma_real, py::arg("x"), "real gamma function");
    m.def("dawson", &ml::dawson, py::arg("x"), "Dawson integral");
    m.def("erfi", &ml::erfi, py::arg("x"), "imaginary error function, 0 <= x <= 26");

    py::class_<ml::MLValue>(m, "MLValue")
        .def_readonly("value", &ml::MLValue::value)
        .def_readonly("err_estimate", &ml::MLValue::err_estimate)
        .def_property_readonly("method",
                               [](const ml::MLValue& v) { return method_name(v.method); })
        .def("__repr__", [](const ml::MLValue& v) {
            return "MLValue(value=" + std::to_string(v.value) +
                   ", err=" + std::to_string(v.err_estimate) + ", method=" +
                   method_name(v.method) + ")";
        });

    m.def("mittag_leffler",
          [](double mu, double nu, double z, double tol) {
              return ml::ml_global({mu, nu, z, tol});
          },
          py::arg("mu"), py::arg("nu"), py::arg("z"), py::arg("tol") = 1e-10,
          "E_{mu,nu}(z) with regime dispatch (series / spectral / asymptotic / closed form)");
    m.def("ml_series",
          [](double mu, double nu, double z, double tol) {
              return ml::ml_series({mu, nu, z, tol});
          },
          py::arg("mu"), py::arg("nu"), py::arg("z"), py::arg("tol") = 1e-10);
    m.def("ml_tail",
          [](double alpha, const std::string& kind, double t, int n_terms) {
              return ml::ml_tail(alpha, parse_kind(kind), t, n_terms);
          },
          py::arg("alpha"), py::arg("kind"), py::arg("t"), py::arg("n_terms"));

    // oscillation pair
    m.def("e_alpha",
          [](double alpha, double omega, double t) {
              return osc::e_alpha({alpha, omega, 1.0, 1.0}, t).value;
          },
          py::arg("alpha"), py::arg("omega"), py::arg("t"));
    m.def("i_alpha",
          [](double alpha, double omega, double t) {
              return osc::i_alpha({alpha, omega, 1.0, 1.0}, t).value;
          },
          py::arg("alpha"), py::arg("omega"), py::arg("t"));
    m.def("i_one", &osc::i_one, py::arg("t"));
    m.def("spectral_kernel",
          [](const std::string& kind, double alpha, double r) {
              return osc::spectral_kernel(kind == "K" || kind == "k" ? osc::KernelKind::K
                                                                     : osc::KernelKind::V,
                                          alpha, r);
          },
          py::arg("kind"), py::arg("alpha"), py::arg("r"));
    m.def("decompose",
          [](const std::string& kind, double alpha, double t) {
              const auto d = osc::decompose(parse_kind(kind), {alpha, 1.0, 1.0, 1.0}, t);
              return py::make_tuple(d.branch_cut.value, d.residue.value);
          },
          py::arg("kind"), py::arg("alpha"), py::arg("t"),
          "returns (branch_cut, residue) at omega = 1");
    m.def("momentum",
          [](double alpha, double omega, double mass, double q0, double t) {
              return osc::momentum({alpha, omega, mass, q0}, t);
          },
          py::arg("alpha"), py::arg("omega"), py::arg("m"), py::arg("q0"), py::arg("t"));
    m.def("energy", &osc::energy, py::arg("p"), py::arg("q"), py::arg("omega"));

    // fractional operators on uniform grids
    m.def("rl_integral",
          [](const std::vector<double>& values, double dt, double beta) {
              return frac::rl_integral({dt, values}, beta).values;
          },
          py::arg("values"), py::arg("dt"), py::arg("beta"),
          "Riemann-Liouville J^beta by product-trapezoidal convolution");
    m.def("caputo_derivative",
          [](const std::vector<double>& values, double dt, double beta) {
              return frac::caputo_derivative({dt, values}, beta).values;
          },
          py::arg("values"), py::arg("dt"), py::arg("beta"));

    py::class_<frac::ResidualReport>(m, "ResidualReport")
        .def_readonly("sup_norm", &frac::ResidualReport::sup_norm)
        .def_readonly("l2_norm", &frac::ResidualReport::l2_norm)
        .def_readonly("expected_order", &frac::ResidualReport::expected_order)
        .def_readonly("window_start", &frac::ResidualReport::window_start)
        .def_property_readonly("residual",
                               [](const frac::ResidualReport& r) { return r.grid.values; });

    m.def("residual_eq2", &frac::residual_eq2, py::arg("alpha"), py::arg("horizon"),
          py::arg("n"));
    m.def("residual_eq3",
          [](const std::string& kind, double alpha, double horizon, int n) {
              return frac::residual_eq3(parse_kind(kind), alpha, horizon, n);
          },
          py::arg("kind"), py::arg("alpha"), py::arg("horizon"), py::arg("n"));
    m.def("residual_eq4", &frac::residual_eq4, py::arg("alpha"), py::arg("horizon"),
          py::arg("n"));
    m.def("duality_check",
          [](double alpha, double horizon, int n) {
              const auto d = frac::duality_check(alpha, horizon, n);
              py::dict out;
              out["D_e"] = d.d_e;
              out["D_i"] = d.d_i;
              out["J_e"] = d.j_e;
              out["J_i"] = d.j_i;
              return out;
          },
          py::arg("alpha"), py::arg("horizon"), py::arg("n"));
    m.def("hamilton_residual",
          [](double alpha, double omega, double mass, double q0, double horizon, int n) {
              const auto h = frac::hamilton_residual({alpha, omega, mass, q0}, horizon, n);
              return py::make_tuple(h.q_eq, h.p_eq);
          },
          py::arg("alpha"), py::arg("omega"), py::arg("m"), py::arg("q0"),
          py::arg("horizon"), py::arg("n"));

    // subordination
    py::class_<sub::MCEstimate>(m, "MCEstimate")
        .def_readonly("t_grid", &sub::MCEstimate::t_grid)
        .def_readonly("a_hat", &sub::MCEstimate::a_hat)
        .def_readonly("b_hat", &sub::MCEstimate::b_hat)
        .def_readonly("std_err_a", &sub::MCEstimate::std_err_a)
        .def_readonly("std_err_b", &sub::MCEstimate::std_err_b)
        .def_readonly("n_paths", &sub::MCEstimate::n_paths)
        .def_readonly("seed", &sub::MCEstimate::seed);

    m.def("mc_oscillation",
          [](double alpha, double omega, std::vector<double> t_grid, long n_paths,
             std::uint64_t seed) {
              return sub::mc_oscillation({alpha, omega, 1.0, 1.0}, std::move(t_grid),
                                         n_paths, seed);
          },
          py::arg("alpha"), py::arg("omega"), py::arg("t_grid"), py::arg("n_paths"),
          py::arg("seed"));
    m.def("ps_density", &sub::ps_density, py::arg("alpha"), py::arg("t"), py::arg("tau"));
    m.def("quadrature_oscillation",
          [](double alpha, double omega, double t) {
              return sub::quadrature_oscillation({alpha, omega, 1.0, 1.0}, t);
          },
          py::arg("alpha"), py::arg("omega"), py::arg("t"));
    m.def("sample_stable",
          [](double beta, long n, std::uint64_t seed) {
              sub::CounterRng rng(seed, 0);
              std::vector<double> out(static_cast<std::size_t>(n));
              for (auto& x : out) x = sub::sample_stable_increment(beta, rng);
              return out;
          },
          py::arg("beta"), py::arg("n"), py::arg("seed"),
          "draws from the one-sided stable law with Laplace transform exp(-s^beta)");

    py::class_<sub::SubordinatorPath>(m, "SubordinatorPath")
        .def_readonly("beta", &sub::SubordinatorPath::beta)
        .def_readonly("tau_step", &sub::SubordinatorPath::tau_step)
        .def_readonly("u_values", &sub::SubordinatorPath::u_values);

    m.def("make_path",
          [](double beta, double tau_step, double t_target, std::uint64_t seed,
             std::uint64_t stream) {
              sub::CounterRng rng(seed, stream);
              return sub::make_path(beta, tau_step, t_target, rng);
          },
          py::arg("beta"), py::arg("tau_step"), py::arg("t_target"), py::arg("seed"),
          py::arg("stream") = 0,
          "stable-subordinator staircase covering t_target");
    m.def("inverse_hitting_time", &sub::inverse_hitting_time, py::arg("path"),
          py::arg("t"));

    // zeros
    py::class_<zeros::ZeroReport>(m, "ZeroReport")
        .def_property_readonly("kind",
                               [](const zeros::ZeroReport& r) {
                                   return r.kind == ml::OscKind::E ? "e" : "i";
                               })
        .def_readonly("alpha", &zeros::ZeroReport::alpha)
        .def_readonly("zeros", &zeros::ZeroReport::zeros)
        .def_readonly("trivial_zero_at_origin", &zeros::ZeroReport::trivial_zero_at_origin)
        .def_readonly("scan_points", &zeros::ZeroReport::scan_points)
        .def_readonly("refine_tol", &zeros::ZeroReport::refine_tol)
        .def_readonly("t_max", &zeros::ZeroReport::t_max)
        .def_readonly("tail_bound_at_tmax", &zeros::ZeroReport::tail_bound_at_tmax)
        .def_readonly("envelope_at_tmax", &zeros::ZeroReport::envelope_at_tmax);

    m.def("find_zeros",
          [](const std::string& kind, double alpha, double refine_tol) {
              return zeros::find_zeros(parse_kind(kind), alpha, refine_tol);
          },
          py::arg("kind"), py::arg("alpha"), py::arg("refine_tol") = 1e-9);
    m.def("smallest_zero_bound", &zeros::smallest_zero_bound, py::arg("alpha"));
    m.def("largest_zero_near1", &zeros::largest_zero_near1, py::arg("eps"));
    m.def("largest_zero_near2", &zeros::largest_zero_near2, py::arg("delta"));
    m.def("delta_of_T", &zeros::delta_of_T, py::arg("T"));
    m.def("zero_count_estimate", &zeros::zero_count_estimate, py::arg("alpha"));
}
