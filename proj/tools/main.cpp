// Command-line front end: invariant verification, photon-number curve
// export and operator-matrix export for the coherent-state kaleidoscope.

#include "cli_support.hpp"

#include <CLI11.hpp>

#include <iostream>

using kscope::cli::RunConfig;

namespace {

void add_common_options(CLI::App* cmd, RunConfig& config, std::string& alpha_text) {
    cmd->add_option("--n", config.n, "polygon order (2..12)")->required();
    cmd->add_option("--alpha", alpha_text, "coherent amplitude, 'a+bi' form");
    cmd->add_option("--tol", config.tol, "truncation tolerance, in (0, 1e-3)");
    cmd->add_option("--dim", config.dim_override, "Fock truncation override (0 = auto)");
    cmd->add_option("--out", config.output_path, "output file (default stdout)");
    cmd->add_option("--format", config.format, "output format: csv or json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthonormal coherent-state kaleidoscope toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    std::string alpha_text = "1.0";

    auto* verify = app.add_subcommand("verify", "run the invariant suite for one (n, alpha)");
    add_common_options(verify, config, alpha_text);

    int s = 0;
    double x_max = 6.0;
    int steps = 120;
    auto* curve = app.add_subcommand("curve", "export <N> against |alpha|^2 for one state");
    add_common_options(curve, config, alpha_text);
    curve->add_option("--s", s, "state index (0..n-1)")->required();
    curve->add_option("--xmax", x_max, "upper end of the |alpha|^2 grid");
    curve->add_option("--steps", steps, "grid intervals (steps+1 rows)");

    std::string which;
    auto* matrix = app.add_subcommand("matrix", "export an n x n operator matrix as JSON");
    add_common_options(matrix, config, alpha_text);
    matrix->add_option("--which", which, "qft|clock|shift|b|bdag|hamiltonian")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.alpha = kscope::cli::parse_complex(alpha_text);
        if (verify->parsed()) return kscope::cli::cmd_verify(config, std::cout);
        if (curve->parsed()) return kscope::cli::cmd_curve(config, s, x_max, steps);
        return kscope::cli::cmd_matrix(config, which);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
