#include "kscope/qalgebra.hpp"

#include "kscope/modexp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kscope {

namespace {

void check_order(int n) {
    if (n < 2) throw std::domain_error("qalgebra: n must be >= 2");
}

// diag(q^(+-2k)), k = 0..n-1
OperatorMatrix dilatation_diag(int n, int sign) {
    const RootOfUnity root(n);
    OperatorMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = root.q_pow2(static_cast<long long>(sign) * k);
    return m;
}

// max |entry| over the leading (n-1) x (n-1) block
double interior_max(const OperatorMatrix& m) {
    double acc = 0.0;
    for (int i = 0; i + 1 < m.dim(); ++i)
        for (int j = 0; j + 1 < m.dim(); ++j)
            acc = std::max(acc, std::abs(m.at(i, j)));
    return acc;
}

// max |entry| over the last row and column
double top_max(const OperatorMatrix& m) {
    double acc = 0.0;
    const int last = m.dim() - 1;
    for (int j = 0; j < m.dim(); ++j) {
        acc = std::max(acc, std::abs(m.at(last, j)));
        acc = std::max(acc, std::abs(m.at(j, last)));
    }
    return acc;
}

} // namespace

SylvesterPair sylvester_pair(int n) {
    check_order(n);
    SylvesterPair pair;
    pair.n = n;
    pair.clock = dilatation_diag(n, +1);
    pair.shift = OperatorMatrix(n);
    for (int j = 0; j < n; ++j) pair.shift.at(j, (j - 1 + n) % n) = 1.0;
    return pair;
}

cx q_number(int k, int n, QNumberKind kind) {
    check_order(n);
    if (kind == QNumberKind::nonsymmetric) {
        const RootOfUnity root(n);
        return (root.q_pow2(k) - 1.0) / (root.q_pow2(1) - 1.0);
    }
    if (n == 2) {
        // sin(pi k)/sin(pi) limit along the unit circle
        return {static_cast<double>(k) * (k % 2 == 0 ? -1.0 : 1.0), 0.0};
    }
    const double step = 2.0 * std::numbers::pi / n;
    const int r = ((k % n) + n) % n;  // exact period of the sine ratio
    return {std::sin(step * r) / std::sin(step), 0.0};
}

std::pair<OperatorMatrix, OperatorMatrix> b_operators(int n, QNumberKind kind) {
    check_order(n);
    OperatorMatrix b(n);
    for (int k = 1; k < n; ++k) b.at(k - 1, k) = std::sqrt(q_number(k, n, kind));
    return {b, b.transpose()};
}

AlgebraResiduals algebra_residuals(int n) {
    check_order(n);
    const RootOfUnity root(n);
    const cx q2 = root.q_pow2(1);
    const cx q2inv = root.q_pow2(-1);
    const OperatorMatrix up = dilatation_diag(n, +1);
    const OperatorMatrix down = dilatation_diag(n, -1);
    const OperatorMatrix id = OperatorMatrix::identity(n);

    AlgebraResiduals out;

    {
        auto [b, bp] = b_operators(n, QNumberKind::symmetric);
        const OperatorMatrix bbp = b * bp;
        const OperatorMatrix bpb = bp * b;
        const OperatorMatrix r1 = bbp - q2 * bpb - down;
        const OperatorMatrix r2 = bbp - q2inv * bpb - up;
        out.sym_q2_interior = interior_max(r1);
        out.sym_qinv2_interior = interior_max(r2);
        out.sym_q2_top = top_max(r1);
        out.sym_qinv2_top = top_max(r2);
    }
    {
        auto [b, bp] = b_operators(n, QNumberKind::nonsymmetric);
        const OperatorMatrix bbp = b * bp;
        const OperatorMatrix bpb = bp * b;
        const OperatorMatrix r1 = bbp - q2 * bpb - id;
        const OperatorMatrix r2 = bbp - bpb - up;
        out.nonsym_q2_interior = interior_max(r1);
        out.nonsym_id_interior = interior_max(r2);
        out.nonsym_q2_top = top_max(r1);
        out.nonsym_id_top = top_max(r2);
    }
    return out;
}

std::vector<double> hamiltonian_spectrum(int n, double hbar_omega) {
    check_order(n);
    if (!(hbar_omega > 0.0)) throw std::domain_error("hamiltonian_spectrum: hbar_omega must be > 0");
    const double pi = std::numbers::pi;
    std::vector<double> levels(n);
    for (int k = 0; k < n; ++k)
        levels[k] = 0.5 * hbar_omega * std::sin(2.0 * pi / n * (k + 0.5)) / std::sin(pi / n);
    return levels;
}

OperatorMatrix hamiltonian_matrix(int n, double hbar_omega) {
    check_order(n);
    OperatorMatrix h(n);
    for (int k = 0; k < n; ++k) {
        const cx nk = q_number(k, n, QNumberKind::symmetric);
        const cx nk1 = q_number(k + 1, n, QNumberKind::symmetric);
        h.at(k, k) = 0.5 * hbar_omega * (nk + nk1);
    }
    return h;
}

} // namespace kscope
