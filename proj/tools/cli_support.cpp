#include "cli_support.hpp"

#include "kscope/kaleidoscope.hpp"
#include "kscope/qalgebra.hpp"
#include "kscope/verify.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace kscope::cli {

namespace {

double parse_double_token(std::string_view token) {
    const std::string_view original = token;
    double sign = 1.0;
    if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
        if (token.front() == '-') sign = -1.0;
        token.remove_prefix(1);  // from_chars rejects a leading '+'
    }
    if (token.empty() || token.front() == '+' || token.front() == '-')
        throw std::invalid_argument("not a number: '" + std::string(original) + "'");
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(original) + "'");
    return sign * value;
}

// signed coefficient in front of 'i'; bare sign or empty means unit
double parse_imag_token(std::string_view token) {
    if (token.empty() || token == "+") return 1.0;
    if (token == "-") return -1.0;
    return parse_double_token(token);
}

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + path);
    return file;
}

nlohmann::ordered_json matrix_to_json(const OperatorMatrix& m, const std::string& which, int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["which"] = which;
    auto grid = [&](auto pick) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.dim(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < m.dim(); ++k) row.push_back(pick(m.at(i, k)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["re"] = grid([](cx v) { return v.real(); });
    j["im"] = grid([](cx v) { return v.imag(); });
    return j;
}

} // namespace

cx parse_complex(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') compact.push_back(c);
    if (compact.empty()) throw std::invalid_argument("empty complex literal");

    const char tail = compact.back();
    if (tail != 'i' && tail != 'I') return {parse_double_token(compact), 0.0};

    std::string_view body(compact.data(), compact.size() - 1);
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string_view::npos;
    for (size_t pos = body.size(); pos-- > 1;) {
        const char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            split = pos;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_imag_token(body)};
    return {parse_double_token(body.substr(0, split)), parse_imag_token(body.substr(split))};
}

std::string format_complex(cx value) {
    std::string out = format_double17(value.real());
    if (value.imag() != 0.0) {
        if (!std::signbit(value.imag())) out += "+";
        out += format_double17(value.imag());
        out += "i";
    }
    return out;
}

void validate(const RunConfig& config) {
    if (config.n < 2 || config.n > 12)
        throw std::invalid_argument("--n must be in [2, 12]");
    if (std::norm(config.alpha) > 300.0)
        throw std::invalid_argument("--alpha magnitude exceeds the |alpha|^2 <= 300 envelope");
    if (!(config.tol > 0.0) || config.tol >= 1e-3)
        throw std::invalid_argument("--tol must be in (0, 1e-3)");
    if (config.dim_override < 0)
        throw std::invalid_argument("--dim must be >= 0");
    if (!config.format.empty() && config.format != "csv" && config.format != "json")
        throw std::invalid_argument("--format must be csv or json");
}

void write_curve_csv(std::ostream& out, const PhotonCurve& curve) {
    out << "alpha_sq,expectation_s" << curve.s << "\n";
    for (const auto& [x, value] : curve.points)
        out << format_double17(x) << "," << format_double17(value) << "\n";
}

void write_curve_json(std::ostream& out, const PhotonCurve& curve) {
    nlohmann::ordered_json j;
    j["n"] = curve.n;
    j["s"] = curve.s;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& [x, value] : curve.points) {
        xs.push_back(x);
        values.push_back(value);
    }
    j["alpha_sq"] = std::move(xs);
    j["expectation"] = std::move(values);
    out << j.dump(2) << "\n";
}

void write_matrix_json(std::ostream& out, const OperatorMatrix& m, const std::string& which) {
    out << matrix_to_json(m, which, m.dim()).dump(2) << "\n";
}

OperatorMatrix matrix_by_name(int n, const std::string& which) {
    if (which == "qft") return qft_matrix(n);
    if (which == "clock") return sylvester_pair(n).clock;
    if (which == "shift") return sylvester_pair(n).shift;
    if (which == "b") return b_operators(n, QNumberKind::symmetric).first;
    if (which == "bdag") return b_operators(n, QNumberKind::symmetric).second;
    if (which == "hamiltonian") return hamiltonian_matrix(n);
    throw std::invalid_argument("unknown matrix '" + which +
                                "' (expected qft|clock|shift|b|bdag|hamiltonian)");
}

int cmd_verify(const RunConfig& config, std::ostream& report) {
    validate(config);
    const auto results = run_suite(config.n, config.alpha, config.tol, config.dim_override);

    int passed = 0;
    for (const auto& check : results) {
        char line[160];
        std::snprintf(line, sizeof line, "[%s] %-42s residual=%.3e  threshold=%.1e",
                      check.pass ? "PASS" : "FAIL", check.name.c_str(),
                      check.residual, check.threshold);
        report << line << "\n";
        if (check.pass) ++passed;
    }
    report << "verify: n=" << config.n << " alpha=" << format_complex(config.alpha)
           << " -> " << passed << "/" << results.size() << " checks passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int cmd_curve(const RunConfig& config, int s, double x_max, int steps) {
    validate(config);
    if (s < 0 || s >= config.n)
        throw std::invalid_argument("--s must be in [0, n)");
    const std::string format = config.format.empty() ? "csv" : config.format;

    const PhotonCurve curve = photon_curve(config.n, s, x_max, steps);
    auto emit = [&](std::ostream& out) {
        if (format == "csv")
            write_curve_csv(out, curve);
        else
            write_curve_json(out, curve);
    };
    if (config.output_path.empty()) {
        emit(std::cout);
    } else {
        std::ofstream file = open_output(config.output_path);
        emit(file);
        if (!file)
            throw std::runtime_error("write failed: " + config.output_path);
    }
    return 0;
}

int cmd_matrix(const RunConfig& config, const std::string& which) {
    validate(config);
    if (!config.format.empty() && config.format != "json")
        throw std::invalid_argument("matrix export supports only --format json");

    const OperatorMatrix m = matrix_by_name(config.n, which);
    if (config.output_path.empty()) {
        write_matrix_json(std::cout, m, which);
    } else {
        std::ofstream file = open_output(config.output_path);
        write_matrix_json(file, m, which);
        if (!file)
            throw std::runtime_error("write failed: " + config.output_path);
    }
    return 0;
}

} // namespace kscope::cli
