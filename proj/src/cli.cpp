#include "fracosc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "fracosc/fractional.hpp"
#include "fracosc/oscillation.hpp"
#include "fracosc/subordination.hpp"
#include "fracosc/zeros.hpp"

namespace fracosc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    if (!std::isfinite(v)) throw std::runtime_error("non-finite value in output");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// json numbers round-trip through the same 17-digit text form
json jnum(double v) { return json::parse(fmt(v)); }

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return out;
}

void emit_table(const CommandConfig& cfg, std::ostream& out) {
    const osc::OscParams p{cfg.alpha, cfg.omega, 1.0, 1.0};
    const auto ts = linspace(cfg.t_min, cfg.t_max, cfg.n_points);
    if (cfg.format == Format::Csv) {
        out << "t,e_alpha,i_alpha\n";
        for (double t : ts)
            out << fmt(t) << ',' << fmt(osc::e_alpha(p, t).value) << ','
                << fmt(osc::i_alpha(p, t).value) << '\n';
        return;
    }
    json rows = json::array();
    for (double t : ts)
        rows.push_back({{"t", jnum(t)},
                        {"e_alpha", jnum(osc::e_alpha(p, t).value)},
                        {"i_alpha", jnum(osc::i_alpha(p, t).value)}});
    json doc{{"alpha", jnum(cfg.alpha)}, {"omega", jnum(cfg.omega)}, {"rows", rows}};
    out << doc.dump(2) << '\n';
}

void emit_decompose(const CommandConfig& cfg, std::ostream& out) {
    const osc::OscParams p{cfg.alpha, 1.0, 1.0, 1.0};
    const double lo = cfg.t_min > 0.0 ? cfg.t_min : cfg.t_max / cfg.n_points;
    const auto ts = linspace(lo, cfg.t_max, cfg.n_points);
    struct Row {
        const char* kind;
        double t, total, cut, res;
    };
    std::vector<Row> rows;
    for (ml::OscKind kind : {ml::OscKind::E, ml::OscKind::I}) {
        const char* name = kind == ml::OscKind::E ? "e" : "i";
        for (double t : ts) {
            const auto d = osc::decompose(kind, p, t);
            const double total = kind == ml::OscKind::E ? osc::e_alpha(p, t).value
                                                        : osc::i_alpha(p, t).value;
            rows.push_back({name, t, total, d.branch_cut.value, d.residue.value});
        }
    }
    if (cfg.format == Format::Csv) {
        out << "kind,t,total,branch_cut,residue\n";
        for (const Row& r : rows)
            out << r.kind << ',' << fmt(r.t) << ',' << fmt(r.total) << ',' << fmt(r.cut)
                << ',' << fmt(r.res) << '\n';
        return;
    }
    json jrows = json::array();
    for (const Row& r : rows)
        jrows.push_back({{"kind", r.kind},
                         {"t", jnum(r.t)},
                         {"total", jnum(r.total)},
                         {"branch_cut", jnum(r.cut)},
                         {"residue", jnum(r.res)}});
    json doc{{"alpha", jnum(cfg.alpha)}, {"rows", jrows}};
    out << doc.dump(2) << '\n';
}

json zero_report_json(const zeros::ZeroReport& r) {
    json zs = json::array();
    for (double z : r.zeros) zs.push_back(jnum(z));
    return {{"kind", r.kind == ml::OscKind::E ? "e" : "i"},
            {"alpha", jnum(r.alpha)},
            {"count", r.zeros.size()},
            {"zeros", zs},
            {"trivial_zero_at_origin", r.trivial_zero_at_origin},
            {"scan_points", r.scan_points},
            {"refine_tol", jnum(r.refine_tol)},
            {"t_max", jnum(r.t_max)},
            {"certificate",
             {{"tail_bound_at_tmax", jnum(r.tail_bound_at_tmax)},
              {"envelope_at_tmax", jnum(r.envelope_at_tmax)},
              {"tail_bound_at_2tmax", jnum(r.tail_bound_at_2tmax)},
              {"envelope_at_2tmax", jnum(r.envelope_at_2tmax)}}}};
}

void emit_zeros(const CommandConfig& cfg, std::ostream& out) {
    std::vector<ml::OscKind> kinds;
    if (cfg.kind == "e") kinds = {ml::OscKind::E};
    else if (cfg.kind == "i") kinds = {ml::OscKind::I};
    else kinds = {ml::OscKind::E, ml::OscKind::I};

    std::vector<zeros::ZeroReport> reports;
    for (auto k : kinds) reports.push_back(zeros::find_zeros(k, cfg.alpha));

    if (cfg.format == Format::Csv) {
        out << "kind,index,zero\n";
        for (const auto& r : reports) {
            const char* name = r.kind == ml::OscKind::E ? "e" : "i";
            for (std::size_t i = 0; i < r.zeros.size(); ++i)
                out << name << ',' << i << ',' << fmt(r.zeros[i]) << '\n';
        }
        return;
    }
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(zero_report_json(r));
    out << doc.dump(2) << '\n';
}

struct Band {
    const char* name;
    double sup_limit;
};

json verify_one(const char* name, const frac::ResidualReport& at_half,
                const frac::ResidualReport& at_n, double sup_limit, bool& all_ok) {
    const double order = std::log2(at_half.sup_norm / at_n.sup_norm);
    const bool ok = at_n.sup_norm <= sup_limit &&
                    std::fabs(order - at_n.expected_order) <= 0.4;
    all_ok = all_ok && ok;
    return {{"name", name},
            {"sup_norm", jnum(at_n.sup_norm)},
            {"l2_norm", jnum(at_n.l2_norm)},
            {"measured_order", jnum(order)},
            {"expected_order", jnum(at_n.expected_order)},
            {"sup_limit", jnum(sup_limit)},
            {"pass", ok}};
}

int emit_verify(const CommandConfig& cfg, std::ostream& out) {
    const double a = cfg.alpha;
    const double hor = cfg.horizon;
    const int n = cfg.n_grid;
    const int nh = n / 2;
    bool all_ok = true;
    json results = json::array();

    results.push_back(verify_one("eq2", frac::residual_eq2(a, hor, nh),
                                 frac::residual_eq2(a, hor, n), 1e-4, all_ok));
    results.push_back(verify_one("eq3_e", frac::residual_eq3(ml::OscKind::E, a, hor, nh),
                                 frac::residual_eq3(ml::OscKind::E, a, hor, n), 0.5, all_ok));
    results.push_back(verify_one("eq4", frac::residual_eq4(a, hor, nh),
                                 frac::residual_eq4(a, hor, n), 2e-2, all_ok));
    const auto duh = frac::duality_check(a, hor, nh);
    const auto dun = frac::duality_check(a, hor, n);
    results.push_back(verify_one("duality_D_e", duh.d_e, dun.d_e, 2e-2, all_ok));
    results.push_back(verify_one("duality_D_i", duh.d_i, dun.d_i, 2e-2, all_ok));
    results.push_back(verify_one("duality_J_e", duh.j_e, dun.j_e, 1e-4, all_ok));
    results.push_back(verify_one("duality_J_i", duh.j_i, dun.j_i, 1e-3, all_ok));
    const osc::OscParams p{a, cfg.omega, 1.0, 1.0};
    const auto hh = frac::hamilton_residual(p, hor, nh);
    const auto hn = frac::hamilton_residual(p, hor, n);
    results.push_back(verify_one("hamilton_q", hh.q_eq, hn.q_eq, 5e-2, all_ok));
    results.push_back(verify_one("hamilton_p", hh.p_eq, hn.p_eq, 5e-2, all_ok));

    json doc{{"alpha", jnum(a)},
             {"horizon", jnum(hor)},
             {"n", n},
             {"order_band", 0.4},
             {"results", results},
             {"pass", all_ok}};
    out << doc.dump(2) << '\n';
    return all_ok ? 0 : 1;
}

void emit_mc(const CommandConfig& cfg, std::ostream& out) {
    const osc::OscParams p{cfg.alpha, cfg.omega, 1.0, 1.0};
    const double lo = cfg.t_min > 0.0 ? cfg.t_min : cfg.t_max / cfg.n_points;
    const auto est =
        sub::mc_oscillation(p, linspace(lo, cfg.t_max, cfg.n_points), cfg.n_paths, cfg.seed);
    if (cfg.format == Format::Csv) {
        out << "t,a_hat,b_hat,std_err_a,std_err_b\n";
        for (std::size_t j = 0; j < est.t_grid.size(); ++j)
            out << fmt(est.t_grid[j]) << ',' << fmt(est.a_hat[j]) << ',' << fmt(est.b_hat[j])
                << ',' << fmt(est.std_err_a[j]) << ',' << fmt(est.std_err_b[j]) << '\n';
        return;
    }
    json rows = json::array();
    for (std::size_t j = 0; j < est.t_grid.size(); ++j)
        rows.push_back({{"t", jnum(est.t_grid[j])},
                        {"a_hat", jnum(est.a_hat[j])},
                        {"b_hat", jnum(est.b_hat[j])},
                        {"std_err_a", jnum(est.std_err_a[j])},
                        {"std_err_b", jnum(est.std_err_b[j])}});
    json doc{{"alpha", jnum(cfg.alpha)},
             {"omega", jnum(cfg.omega)},
             {"n_paths", est.n_paths},
             {"seed", est.seed},
             {"rows", rows}};
    out << doc.dump(2) << '\n';
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!(cfg.t_min < cfg.t_max) || cfg.n_points < 2) {
        err << "error: need t_min < t_max and n_points >= 2\n";
        return 2;
    }
    try {
        std::ostringstream buf;
        int status = 0;
        switch (cfg.subcommand) {
            case Subcommand::Table: emit_table(cfg, buf); break;
            case Subcommand::Decompose: emit_decompose(cfg, buf); break;
            case Subcommand::Zeros: emit_zeros(cfg, buf); break;
            case Subcommand::Verify: status = emit_verify(cfg, buf); break;
            case Subcommand::Mc: emit_mc(cfg, buf); break;
        }
        // written once, whole document at a time
        if (cfg.output_path.empty()) {
            out << buf.str();
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output path " << cfg.output_path << '\n';
                return 2;
            }
            file << buf.str();
        }
        return status;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
}

}  // namespace fracosc::cli
