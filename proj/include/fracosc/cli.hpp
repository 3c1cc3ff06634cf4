#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace fracosc::cli {

enum class Subcommand { Table, Decompose, Zeros, Verify, Mc };
enum class Format { Csv, Json };

struct CommandConfig {
    Subcommand subcommand = Subcommand::Table;
    double alpha = 1.5;
    double omega = 1.0;
    double t_min = 0.0;
    double t_max = 10.0;
    int n_points = 201;
    long n_paths = 10000;
    std::uint64_t seed = 12345;
    int n_grid = 1024;          // verify: grid size
    double horizon = 10.0;      // verify: time horizon
    std::string kind = "both";  // zeros: e, i or both
    Format format = Format::Csv;
    std::string output_path;    // empty: standard output
};

// Executes one subcommand and streams the document to out.
// Returns the process exit status: 0 success, 1 numerical failure
// (message on err), 2 argument error.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fracosc::cli
