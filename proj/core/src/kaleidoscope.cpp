#include "kscope/kaleidoscope.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kscope {

namespace {

void check_state_args(int n, int s, int dim) {
    if (n < 1) throw std::domain_error("kaleidoscope: n must be >= 1");
    if (s < 0 || s >= n) throw std::domain_error("kaleidoscope: s outside [0, n)");
    if (dim <= s) throw std::invalid_argument("kaleidoscope: dim must exceed s");
}

} // namespace

OperatorMatrix qft_matrix(int n) {
    if (n < 1) throw std::domain_error("qft_matrix: n must be >= 1");
    const RootOfUnity root(n);
    // sqrt(1/n) is the correctly rounded 1/sqrt(n); 1.0/sqrt(n) can be an ulp off
    const double scale = std::sqrt(1.0 / n);
    OperatorMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m.at(j, k) = scale * std::conj(root.q_pow2(static_cast<long long>(j) * k));
    return m;
}

FockVector build_state_qft(int n, cx alpha, int s, int dim) {
    check_state_args(n, s, dim);
    if (alpha == cx{}) return FockVector::basis(dim, s);

    const RootOfUnity root(n);
    FockVector acc(dim);
    for (int j = 0; j < n; ++j) {
        const cx weight = std::conj(root.q_pow2(static_cast<long long>(j) * s));
        const FockVector coh = coherent_state(root.q_pow2(j) * alpha, dim);
        for (int m = 0; m < dim; ++m) acc[m] += weight * coh[m];
    }

    const double nrm = acc.norm();
    if (nrm == 0.0)
        throw std::domain_error("build_state_qft: superposition cancelled to zero");
    for (cx& a : acc.amp) a /= nrm;
    return canonical_phase(std::move(acc), s);
}

FockVector build_state_direct(int n, cx alpha, int s, int dim) {
    check_state_args(n, s, dim);
    if (alpha == cx{}) return FockVector::basis(dim, s);

    const double x = std::norm(alpha);
    const double fs = mod_exp_series(n, s, x).real();
    if (!(fs > 0.0))
        throw std::domain_error("build_state_direct: f_s(|alpha|^2) not positive");

    FockVector v(dim);
    // g_{k} on level nk+s via g_{k+1} = g_k alpha^n / sqrt(prod (nk+s+j))
    cx g{1.0, 0.0};
    for (int j = 1; j <= s; ++j) g *= alpha / std::sqrt(static_cast<double>(j));
    const double root_fs = std::sqrt(fs);
    for (int m = s; m < dim; m += n) {
        v[m] = g / root_fs;
        cx step{1.0, 0.0};
        for (int j = 1; j <= n; ++j) step *= alpha / std::sqrt(static_cast<double>(m + j));
        g *= step;
    }

    const double nrm = v.norm();
    for (cx& a : v.amp) a /= nrm;
    return v;
}

FockVector canonical_phase(FockVector v, int level) {
    if (level < 0 || level >= v.dim())
        throw std::invalid_argument("canonical_phase: level outside [0, dim)");
    const cx pivot = v[level];
    const double mag = std::abs(pivot);
    if (mag == 0.0) return v;
    const cx rot = std::conj(pivot) / mag;
    for (cx& a : v.amp) a *= rot;
    return v;
}

double normalization_constant(int n, int s, double alpha_sq) {
    if (n < 1) throw std::domain_error("normalization_constant: n must be >= 1");
    if (s < 0 || s >= n) throw std::domain_error("normalization_constant: s outside [0, n)");
    if (alpha_sq < 0.0) throw std::domain_error("normalization_constant: alpha_sq must be >= 0");
    const double fs = mod_exp_series(n, s, alpha_sq).real();
    if (fs == 0.0)
        throw std::domain_error("normalization_constant: diverges, f_s(alpha_sq) = 0");
    return std::exp(0.5 * alpha_sq) / (n * std::sqrt(fs));
}

KaleidoscopeBasis make_basis(int n, cx alpha, int dim, double tol) {
    if (n < 1) throw std::domain_error("make_basis: n must be >= 1");
    if (dim == 0) {
        // The power-eigenstate identity applies a^n, which amplifies the
        // truncated tail by |alpha|^n, and each sub-lattice state tops out
        // at dim-n already: shrink the tail budget and pad one block.
        const double amplification = std::pow(std::abs(alpha), n);
        const double eff =
            std::max(tol / (std::sqrt(static_cast<double>(n)) * std::max(1.0, amplification)),
                     1e-150);
        dim = truncation_dim(std::abs(alpha), n, eff) + n;
    }

    KaleidoscopeBasis basis;
    basis.n = n;
    basis.alpha = alpha;
    basis.dim = dim;
    basis.states.reserve(n);
    basis.norms.reserve(n);
    const double x = std::norm(alpha);
    for (int s = 0; s < n; ++s) {
        basis.states.push_back(build_state_direct(n, alpha, s, dim));
        if (x == 0.0 && s > 0)
            basis.norms.push_back(std::numeric_limits<double>::infinity());
        else
            basis.norms.push_back(normalization_constant(n, s, x));
    }
    return basis;
}

OperatorMatrix gram_matrix(const KaleidoscopeBasis& basis) {
    OperatorMatrix g(basis.n);
    for (int s = 0; s < basis.n; ++s)
        for (int t = 0; t < basis.n; ++t)
            g.at(s, t) = inner_product(basis.states[s], basis.states[t]);
    return g;
}

FockVector apply_parity(int n, const FockVector& v) {
    if (n < 1) throw std::domain_error("apply_parity: n must be >= 1");
    const RootOfUnity root(n);
    FockVector out(v.dim());
    for (int m = 0; m < v.dim(); ++m) out[m] = root.q_pow2(m) * v[m];
    return out;
}

double check_power_eigenstate(const KaleidoscopeBasis& basis, int s) {
    if (s < 0 || s >= basis.n) throw std::domain_error("check_power_eigenstate: s outside [0, n)");
    FockVector lowered = basis.states[s];
    for (int j = 0; j < basis.n; ++j) lowered = apply_annihilation(lowered);

    cx alpha_n{1.0, 0.0};
    for (int j = 0; j < basis.n; ++j) alpha_n *= basis.alpha;

    const FockVector diff = lowered - (alpha_n * basis.states[s]);
    return diff.norm();
}

} // namespace kscope
