#ifndef KSCOPE_MODEXP_HPP
#define KSCOPE_MODEXP_HPP

#include <complex>

namespace kscope {

using cx = std::complex<double>;

/// Default series stopping tolerance: next term below eps*(1+|partial sum|).
inline constexpr double kSeriesEps = 1e-16;

/// Overflow guard for the exponential-scale series/superposition arguments.
inline constexpr double kArgGuard = 700.0;

/// The primitive root q = exp(i*pi/n) with q^(2n) = 1, and w = conj(q^2)
/// = exp(-2*pi*i/n). All phase conventions in the library flow from here.
struct RootOfUnity {
    int n;
    cx q;  // exp(i*pi/n)
    cx w;  // conj(q^2) = exp(-2*pi*i/n)

    explicit RootOfUnity(int order);

    /// q^(2m) = exp(2*pi*i*m/n), exponent reduced mod n before evaluation.
    cx q_pow2(long long m) const;

    /// sum_{k=0}^{n-1} q^(2mk); equals n when m = 0 (mod n) and 0 otherwise.
    cx power_sum(long long m) const;
};

// The family f_s(x) = sum_{k>=0} x^(nk+s)/(nk+s)!, s = 0..n-1; the n-part
// partition of the exponential series. Three evaluation routes are exposed
// so they can cross-validate each other.

/// Direct series with multiplicative term recurrence.
/// Requires n >= 1, 0 <= s < n, |x| <= 700.
cx mod_exp_series(int n, int s, cx x, double precision = kSeriesEps);

/// Finite superposition (1/n) sum_k conj(q^(2sk)) exp(q^(2k) x).
/// Loses digits to cancellation for large real x; prefer the series there.
cx mod_exp_superposition(int n, int s, cx x);

/// Real closed forms for n = 2 (cosh/sinh), n = 3 (exp + damped cosine)
/// and n = 4 (half sums/differences of cosh/cos and sinh/sin).
/// Throws std::domain_error for any other order.
double mod_exp_closed(int n, int s, double x);

/// |f_s^(n)(x) - f_s(x)| with the n-th derivative taken by applying the
/// index-cycling rule f_s' = f_{s-1 (mod n)} n times, which lands back on
/// index s; both sides are evaluated as series. Zero up to round-off.
double ode_residual(int n, int s, double x);

/// |f_{s-1 (mod n)}(x) - (f_s(x+h) - f_s(x-h)) / (2h)|: the derivative
/// cycling rule cross-checked against a central finite difference.
double derivative_fd_residual(int n, int s, double x, double h);

/// Evaluator bound to a fixed polygon order and stopping tolerance.
struct ModExpFamily {
    int n;
    double precision;

    explicit ModExpFamily(int order, double eps = kSeriesEps);

    cx series(int s, cx x) const { return mod_exp_series(n, s, x, precision); }
    cx superposition(int s, cx x) const { return mod_exp_superposition(n, s, x); }
    double closed(int s, double x) const { return mod_exp_closed(n, s, x); }

    /// |sum_s f_s(x) - e^x|, the term-by-term partition of exp.
    double partition_residual(double x) const;
};

} // namespace kscope

#endif
