#include "kscope/fock.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace kscope {

namespace {

// Upper Poisson tail sum_{m>=start} e^{-lam} lam^m / m!, summed directly so
// values far below 1 ulp of the CDF (e.g. 1e-24) stay resolvable.
double poisson_tail(double lam, int start) {
    if (lam == 0.0) return start > 0 ? 0.0 : 1.0;
    // first term in log space; the direct product would underflow first
    double t = std::exp(-lam + start * std::log(lam) - std::lgamma(start + 1.0));
    double tail = 0.0;
    int m = start;
    while (t > 0.0) {
        tail += t;
        ++m;
        t *= lam / m;
        if (t < tail * 1e-20) break;
    }
    return tail;
}

} // namespace

FockVector FockVector::basis(int dim, int level) {
    if (dim < 1) throw std::invalid_argument("FockVector::basis: dim must be >= 1");
    if (level < 0 || level >= dim)
        throw std::invalid_argument("FockVector::basis: level outside [0, dim)");
    FockVector v(dim);
    v[level] = 1.0;
    return v;
}

double FockVector::norm() const {
    double s = 0.0;
    for (const cx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

FockVector operator+(FockVector lhs, const FockVector& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("FockVector: dimension mismatch");
    for (int m = 0; m < lhs.dim(); ++m) lhs[m] += rhs[m];
    return lhs;
}

FockVector operator-(FockVector lhs, const FockVector& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("FockVector: dimension mismatch");
    for (int m = 0; m < lhs.dim(); ++m) lhs[m] -= rhs[m];
    return lhs;
}

FockVector operator*(cx scale, FockVector v) {
    for (cx& a : v.amp) a *= scale;
    return v;
}

int truncation_dim(double alpha_abs, int n, double tol) {
    if (n < 1) throw std::invalid_argument("truncation_dim: n must be >= 1");
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("truncation_dim: tol must be in (0, 1)");
    const double lam = alpha_abs * alpha_abs;
    int dim = 4 * n;
    while (poisson_tail(lam, dim) >= tol * tol) dim += n;
    return dim;
}

FockVector coherent_state(cx alpha, int dim) {
    if (dim < 1) throw std::invalid_argument("coherent_state: dim must be >= 1");
    const double lam = std::norm(alpha);
    if (lam > 300.0) throw std::overflow_error("coherent_state: |alpha|^2 exceeds the guard of 300");

    FockVector v(dim);
    v[0] = std::exp(-0.5 * lam);
    for (int m = 1; m < dim; ++m) v[m] = v[m - 1] * alpha / std::sqrt(static_cast<double>(m));

    // renormalize so truncation tail loss does not leak into orthonormality tests
    const double nrm = v.norm();
    if (nrm > 0.0)
        for (cx& a : v.amp) a /= nrm;
    return v;
}

FockVector apply_annihilation(const FockVector& v) {
    const int d = v.dim();
    FockVector out(d);
    for (int m = 0; m + 1 < d; ++m) out[m] = std::sqrt(m + 1.0) * v[m + 1];
    return out;
}

FockVector apply_creation(const FockVector& v) {
    const int d = v.dim();
    FockVector out(d);
    for (int m = 1; m < d; ++m) out[m] = std::sqrt(static_cast<double>(m)) * v[m - 1];
    return out;
}

cx inner_product(const FockVector& u, const FockVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    cx acc{0.0, 0.0};
    for (int m = 0; m < u.dim(); ++m) acc += std::conj(u[m]) * v[m];
    return acc;
}

double number_expectation(const FockVector& v) {
    const double nrm = v.norm();
    if (std::abs(nrm - 1.0) > 1e-6)
        std::cerr << "kscope: number_expectation called on a non-normalized vector (norm = "
                  << nrm << ")\n";
    double acc = 0.0;
    for (int m = 0; m < v.dim(); ++m) acc += m * std::norm(v[m]);
    return acc;
}

} // namespace kscope
