#ifndef KSCOPE_CLI_SUPPORT_HPP
#define KSCOPE_CLI_SUPPORT_HPP

#include "kscope/matrix.hpp"
#include "kscope/photon.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kscope::cli {

/// Parse "a+bi" with optional parts: "1.5", "-2", "1+i", "0.5-0.25i", "i",
/// "2i". Locale-independent. Throws std::invalid_argument on anything else.
cx parse_complex(std::string_view text);

/// Render a complex number back in the "a+bi" input form.
std::string format_complex(cx value);

struct RunConfig {
    int n = 2;
    cx alpha{1.0, 0.0};
    double tol = 1e-12;
    int dim_override = 0;     // 0 picks the Poisson-tail truncation
    std::string output_path;  // empty writes to stdout
    std::string format;       // "csv" | "json"; empty = per-command default
};

/// Throws std::invalid_argument when a field is outside the supported range
/// (2 <= n <= 12, 0 < tol < 1e-3, dim_override >= 0, known format).
void validate(const RunConfig& config);

/// CSV rows "alpha_sq,expectation_s{s}" with 17 significant digits.
void write_curve_csv(std::ostream& out, const PhotonCurve& curve);

/// JSON alternative for curve export.
void write_curve_json(std::ostream& out, const PhotonCurve& curve);

/// {"n":..., "which":..., "re":[[...]], "im":[[...]]}, row-major, full
/// double precision.
void write_matrix_json(std::ostream& out, const OperatorMatrix& m, const std::string& which);

/// Look up one of {qft, clock, shift, b, bdag, hamiltonian} for order n.
/// b/bdag use the symmetric q-number convention. Throws on unknown names.
OperatorMatrix matrix_by_name(int n, const std::string& which);

// Subcommand bodies; exit status 0 on success, 1 on invariant failure.
// Configuration problems throw std::invalid_argument (exit 2 in main).
int cmd_verify(const RunConfig& config, std::ostream& report);
int cmd_curve(const RunConfig& config, int s, double x_max, int steps);
int cmd_matrix(const RunConfig& config, const std::string& which);

} // namespace kscope::cli

#endif
