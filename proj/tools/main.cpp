#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracosc/cli.hpp"

namespace {

// backing store for the --format flag; must outlive parsing
std::string g_format = "csv";

void add_common(CLI::App* cmd, fracosc::cli::CommandConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "fractional order alpha in [1,2]")
        ->capture_default_str();
    cmd->add_option("--format", g_format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
    cmd->parse_complete_callback([&cfg] {
        cfg.format = g_format == "json" ? fracosc::cli::Format::Json
                                        : fracosc::cli::Format::Csv;
    });
}

}  // namespace

int main(int argc, char** argv) {
    fracosc::cli::CommandConfig cfg;
    CLI::App app{
        "fracosc: Mittag-Leffler oscillation pair e_alpha/i_alpha, spectral "
        "decomposition, fractional-operator residual checks, zero reports and "
        "Monte-Carlo subordination.\n"
        "Environment: FRACOSC_THREADS caps the mc worker count (default: all cores)."};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "sample e_alpha and i_alpha on a time grid");
    add_common(table, cfg);
    table->add_option("--omega", cfg.omega, "circular frequency")->capture_default_str();
    table->add_option("--t-min", cfg.t_min, "grid start")->capture_default_str();
    table->add_option("--t-max", cfg.t_max, "grid end")->capture_default_str();
    table->add_option("--n-points", cfg.n_points, "grid size")->capture_default_str();

    auto* dec = app.add_subcommand(
        "decompose", "branch-cut/residue split of both oscillation kinds (omega = 1)");
    add_common(dec, cfg);
    dec->add_option("--t-min", cfg.t_min, "grid start (0: one step in)")->capture_default_str();
    dec->add_option("--t-max", cfg.t_max, "grid end")->capture_default_str();
    dec->add_option("--n-points", cfg.n_points, "grid size")->capture_default_str();

    auto* zer = app.add_subcommand("zeros", "bracketed and refined real zeros");
    add_common(zer, cfg);
    zer->add_option("--kind", cfg.kind, "e, i or both")
        ->check(CLI::IsMember({"e", "i", "both"}))
        ->capture_default_str();

    auto* ver = app.add_subcommand(
        "verify", "fractional-equation residual suite (JSON report, nonzero exit on failure)");
    add_common(ver, cfg);
    ver->add_option("--omega", cfg.omega, "circular frequency for the Hamilton pair")
        ->capture_default_str();
    ver->add_option("--n", cfg.n_grid, "grid size")->capture_default_str();
    ver->add_option("--horizon", cfg.horizon, "time horizon")->capture_default_str();

    auto* mc = app.add_subcommand("mc", "Monte-Carlo subordination estimate of e/i");
    add_common(mc, cfg);
    mc->add_option("--omega", cfg.omega, "circular frequency")->capture_default_str();
    mc->add_option("--t-min", cfg.t_min, "grid start (0: one step in)")->capture_default_str();
    mc->add_option("--t-max", cfg.t_max, "grid end")->capture_default_str();
    mc->add_option("--n-points", cfg.n_points, "grid size")->capture_default_str();
    mc->add_option("--n-paths", cfg.n_paths, "ensemble size")->capture_default_str();
    mc->add_option("--seed", cfg.seed, "stream seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (table->parsed()) cfg.subcommand = fracosc::cli::Subcommand::Table;
    else if (dec->parsed()) cfg.subcommand = fracosc::cli::Subcommand::Decompose;
    else if (zer->parsed()) cfg.subcommand = fracosc::cli::Subcommand::Zeros;
    else if (ver->parsed()) cfg.subcommand = fracosc::cli::Subcommand::Verify;
    else cfg.subcommand = fracosc::cli::Subcommand::Mc;

    return fracosc::cli::run(cfg, std::cout, std::cerr);
}
