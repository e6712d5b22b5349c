#ifndef KSCOPE_KALEIDOSCOPE_HPP
#define KSCOPE_KALEIDOSCOPE_HPP

#include "kscope/fock.hpp"
#include "kscope/matrix.hpp"
#include "kscope/modexp.hpp"

#include <vector>

namespace kscope {

/// n x n discrete Fourier matrix, entry[j][k] = w^(jk)/sqrt(n) with
/// w = exp(-2*pi*i/n). Row s applied to the rotated coherent-state tuple
/// produces the state supported on Fock levels = s (mod n).
OperatorMatrix qft_matrix(int n);

/// Superposition route: sum_j w^(js) |q^(2j) alpha> normalized, with the
/// phase rotated so the amplitude on Fock level s is real positive.
/// alpha = 0 returns the number state |s> (the analytic limit).
FockVector build_state_qft(int n, cx alpha, int s, int dim);

/// Generating-series route: amp[nk+s] = alpha^(nk+s)/sqrt((nk+s)!)
/// / sqrt(f_s(|alpha|^2)), exact zeros elsewhere. Carries the natural
/// phase of alpha^m (no canonicalization); renormalized after truncation.
/// alpha = 0 returns |s>.
FockVector build_state_direct(int n, cx alpha, int s, int dim);

/// Rotate v by a global phase so amp[level] is real positive. A zero
/// amplitude at that level leaves v untouched.
FockVector canonical_phase(FockVector v, int level);

/// N_s = e^(x/2) / (n sqrt(f_s(x))), the constant that makes
/// N_s sum_j conj(q^(2sj)) |q^(2j) alpha> unit-norm. Throws when
/// f_s(x) = 0 (only at x = 0 with s > 0, where the constant diverges).
double normalization_constant(int n, int s, double alpha_sq);

/// The n orthonormal states for fixed (n, alpha) plus their superposition
/// normalization constants. States use the generating-series construction.
struct KaleidoscopeBasis {
    int n = 0;
    cx alpha;
    int dim = 0;
    std::vector<FockVector> states;  // index s
    std::vector<double> norms;       // N_s; +inf at the alpha = 0 kitten limit for s > 0
};

/// Build the basis; dim = 0 picks truncation_dim(|alpha|, n, tol).
KaleidoscopeBasis make_basis(int n, cx alpha, int dim = 0, double tol = 1e-12);

/// G[s][t] = <s|t>.
OperatorMatrix gram_matrix(const KaleidoscopeBasis& basis);

/// Dilatation q^(2N): out[m] = q^(2m) v[m] with q = exp(i*pi/n). For n = 2
/// this is the photon parity operator (-1)^N.
FockVector apply_parity(int n, const FockVector& v);

/// || a^n |s> - alpha^n |s> ||_2, the power-eigenstate residual.
double check_power_eigenstate(const KaleidoscopeBasis& basis, int s);

} // namespace kscope

#endif
