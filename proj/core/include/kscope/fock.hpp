#ifndef KSCOPE_FOCK_HPP
#define KSCOPE_FOCK_HPP

#include <complex>
#include <vector>

namespace kscope {

using cx = std::complex<double>;

/// State vector in a Fock space truncated to levels |0> .. |dim-1>;
/// amp[m] is the amplitude on the m-photon number state.
struct FockVector {
    std::vector<cx> amp;

    FockVector() = default;
    explicit FockVector(int dim) : amp(static_cast<size_t>(dim)) {}

    /// Number basis vector |level>.
    static FockVector basis(int dim, int level);

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const;

    cx operator[](int m) const { return amp[static_cast<size_t>(m)]; }
    cx& operator[](int m) { return amp[static_cast<size_t>(m)]; }
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator-(FockVector lhs, const FockVector& rhs);
FockVector operator*(cx scale, FockVector v);

/// Smallest truncation dimension that is a multiple of n, at least 4n, and
/// leaves a Poisson tail below tol^2 for a coherent state of modulus
/// alpha_abs (so the truncated state keeps norm >= 1 - tol).
int truncation_dim(double alpha_abs, int n, double tol);

/// Truncated coherent state e^{-|a|^2/2} sum_m a^m/sqrt(m!) |m>,
/// renormalized to unit norm after truncation. Guards |a|^2 <= 300.
FockVector coherent_state(cx alpha, int dim);

/// Lowering: out[m] = sqrt(m+1) v[m+1]; the top level gets zero shifted in.
/// Not renormalized.
FockVector apply_annihilation(const FockVector& v);

/// Raising: out[m] = sqrt(m) v[m-1]; amplitude pushed past the top level is
/// dropped (truncation leak). Not renormalized.
FockVector apply_creation(const FockVector& v);

/// <u|v>, conjugate-linear in the first argument. Dims must match.
cx inner_product(const FockVector& u, const FockVector& v);

/// <N> = sum_m m |v[m]|^2 for a normalized v. Warns on stderr when the norm
/// deviates from 1 by more than 1e-6.
double number_expectation(const FockVector& v);

} // namespace kscope

#endif
