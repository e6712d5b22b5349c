#include "kscope/photon.hpp"

#include "kscope/modexp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kscope {

namespace {

// Ratio f_{s-1}/f_s for large real x, n <= 4, from the closed forms with the
// dominant exponential factored out so nothing overflows.
double closed_ratio_large(int n, int s, double x) {
    const int sm1 = (s - 1 + n) % n;
    switch (n) {
        case 1:
            return 1.0;
        case 2:
            return s == 0 ? std::tanh(x) : 1.0 / std::tanh(x);
        case 3: {
            const double third = 2.0 * std::numbers::pi / 3.0;
            const double damp = 2.0 * std::exp(-1.5 * x);
            const double arg = 0.5 * std::sqrt(3.0) * x;
            const double num = 1.0 + damp * std::cos(arg - third * sm1);
            const double den = 1.0 + damp * std::cos(arg - third * s);
            return num / den;
        }
        case 4: {
            // 2 e^{-x} f_s(x) = 1 + e^{-2x} + 2 e^{-x} c_s(x)
            const double damp = 2.0 * std::exp(-x);
            const double tiny = std::exp(-2.0 * x);
            auto scaled = [&](int idx) {
                switch (idx) {
                    case 0: return 1.0 + tiny + damp * std::cos(x);
                    case 1: return 1.0 - tiny + damp * std::sin(x);
                    case 2: return 1.0 + tiny - damp * std::cos(x);
                    default: return 1.0 - tiny - damp * std::sin(x);
                }
            };
            return scaled(sm1) / scaled(s);
        }
        default:
            throw std::domain_error("closed_ratio_large: n must be <= 4");
    }
}

// n e^{-x} f_s(x) = sum_k w^{sk} exp((q^{2k}-1) x); every k >= 1 term decays
// for x > 0, so the ratio is benign even when f_s itself overflows.
double scaled_superposition(int n, int s, double x) {
    const RootOfUnity root(n);
    cx acc{0.0, 0.0};
    for (int k = 0; k < n; ++k)
        acc += std::conj(root.q_pow2(static_cast<long long>(s) * k)) *
               std::exp((root.q_pow2(k) - 1.0) * x);
    return acc.real();
}

} // namespace

double photon_expectation(int n, int s, double alpha_sq) {
    if (n < 1) throw std::domain_error("photon_expectation: n must be >= 1");
    if (s < 0 || s >= n) throw std::domain_error("photon_expectation: s outside [0, n)");
    if (alpha_sq < 0.0) throw std::domain_error("photon_expectation: alpha_sq must be >= 0");

    // below this the correction to the limit value s is under 1 ulp and the
    // raw series ratio would start to underflow for large n
    if (alpha_sq < 1e-18) return static_cast<double>(s);

    const int sm1 = (s - 1 + n) % n;
    if (alpha_sq <= 30.0) {
        const double num = mod_exp_series(n, sm1, alpha_sq).real();
        const double den = mod_exp_series(n, s, alpha_sq).real();
        return alpha_sq * num / den;
    }
    if (n <= 4) return alpha_sq * closed_ratio_large(n, s, alpha_sq);
    return alpha_sq * scaled_superposition(n, sm1, alpha_sq) /
           scaled_superposition(n, s, alpha_sq);
}

PhotonCurve photon_curve(int n, int s, double x_max, int steps) {
    if (steps < 2) throw std::invalid_argument("photon_curve: steps must be >= 2");
    if (!(x_max > 0.0)) throw std::invalid_argument("photon_curve: x_max must be > 0");

    PhotonCurve curve;
    curve.n = n;
    curve.s = s;
    curve.points.reserve(static_cast<size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double x = x_max * static_cast<double>(i) / steps;
        curve.points.emplace_back(x, photon_expectation(n, s, x));
    }
    return curve;
}

} // namespace kscope
