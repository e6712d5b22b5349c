#include "kscope/modexp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kscope {

namespace {

void check_order_and_residue(int n, int s) {
    if (n < 1) throw std::domain_error("mod_exp: order n must be >= 1");
    if (s < 0 || s >= n)
        throw std::domain_error("mod_exp: residue s=" + std::to_string(s) +
                                " outside [0, " + std::to_string(n - 1) + "]");
}

void check_magnitude(cx x) {
    if (std::abs(x) > kArgGuard)
        throw std::overflow_error("mod_exp: |x| exceeds the double-precision guard of 700");
}

} // namespace

RootOfUnity::RootOfUnity(int order) : n(order) {
    if (order < 1) throw std::domain_error("RootOfUnity: n must be >= 1");
    const double pi = std::numbers::pi;
    q = std::polar(1.0, pi / n);
    w = std::polar(1.0, -2.0 * pi / n);
}

cx RootOfUnity::q_pow2(long long m) const {
    long long r = m % n;
    if (r < 0) r += n;
    if (r == 0) return {1.0, 0.0};
    if (2 * r == n) return {-1.0, 0.0};
    if (4 * r == n) return {0.0, 1.0};
    if (4 * r == 3LL * n) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n);
}

cx RootOfUnity::power_sum(long long m) const {
    cx acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) acc += q_pow2(m * k);
    return acc;
}

cx mod_exp_series(int n, int s, cx x, double precision) {
    check_order_and_residue(n, s);
    check_magnitude(x);

    if (x == cx{}) return s == 0 ? cx{1.0, 0.0} : cx{};

    // Leading term x^s / s!
    cx term{1.0, 0.0};
    for (int j = 1; j <= s; ++j) term *= x / static_cast<double>(j);

    cx xn{1.0, 0.0};
    for (int j = 0; j < n; ++j) xn *= x;

    cx sum = term;
    long long m = s;
    // t_{k+1} = t_k * x^n / ((m+1)(m+2)...(m+n))
    while (true) {
        cx step = xn;
        for (int j = 1; j <= n; ++j) step /= static_cast<double>(m + j);
        term *= step;
        m += n;
        sum += term;
        if (std::abs(term) < precision * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

cx mod_exp_superposition(int n, int s, cx x) {
    check_order_and_residue(n, s);
    check_magnitude(x);

    const RootOfUnity root(n);
    cx acc{0.0, 0.0};
    for (int k = 0; k < n; ++k)
        acc += std::conj(root.q_pow2(static_cast<long long>(s) * k)) *
               std::exp(root.q_pow2(k) * x);
    return acc / static_cast<double>(n);
}

double mod_exp_closed(int n, int s, double x) {
    check_order_and_residue(n, s);
    switch (n) {
        case 2:
            return s == 0 ? std::cosh(x) : std::sinh(x);
        case 3: {
            const double third = 2.0 * std::numbers::pi / 3.0;
            return (std::exp(x) +
                    2.0 * std::exp(-0.5 * x) *
                        std::cos(0.5 * std::sqrt(3.0) * x - third * s)) / 3.0;
        }
        case 4:
            switch (s) {
                case 0: return 0.5 * (std::cosh(x) + std::cos(x));
                case 1: return 0.5 * (std::sinh(x) + std::sin(x));
                case 2: return 0.5 * (std::cosh(x) - std::cos(x));
                default: return 0.5 * (std::sinh(x) - std::sin(x));
            }
        default:
            throw std::domain_error("mod_exp_closed: closed forms exist for n in {2,3,4} only");
    }
}

double ode_residual(int n, int s, double x) {
    check_order_and_residue(n, s);
    // n applications of f_s' = f_{s-1 (mod n)} cycle back to index s.
    int idx = s;
    for (int j = 0; j < n; ++j) idx = (idx - 1 + n) % n;
    const cx nth_derivative = mod_exp_series(n, idx, x);
    const cx value = mod_exp_series(n, s, x);
    return std::abs(nth_derivative - value);
}

double derivative_fd_residual(int n, int s, double x, double h) {
    check_order_and_residue(n, s);
    if (h <= 0.0) throw std::domain_error("derivative_fd_residual: h must be > 0");
    const cx analytic = mod_exp_series(n, (s - 1 + n) % n, x);
    const cx fd = (mod_exp_series(n, s, x + h) - mod_exp_series(n, s, x - h)) / (2.0 * h);
    return std::abs(analytic - fd);
}

ModExpFamily::ModExpFamily(int order, double eps) : n(order), precision(eps) {
    if (order < 1) throw std::domain_error("ModExpFamily: n must be >= 1");
    if (!(eps > 0.0)) throw std::domain_error("ModExpFamily: precision must be > 0");
}

double ModExpFamily::partition_residual(double x) const {
    cx total{0.0, 0.0};
    for (int s = 0; s < n; ++s) total += series(s, x);
    return std::abs(total - std::exp(cx{x, 0.0}));
}

} // namespace kscope
