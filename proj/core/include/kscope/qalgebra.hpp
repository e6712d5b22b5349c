#ifndef KSCOPE_QALGEBRA_HPP
#define KSCOPE_QALGEBRA_HPP

#include "kscope/matrix.hpp"

#include <utility>
#include <vector>

namespace kscope {

/// Sylvester generators of the finite Weyl pair: clock = diag(q^(2k)) and
/// the cyclic shift with entry[j][j-1 (mod n)] = 1, built from q = exp(i*pi/n).
/// They obey clock^n = shift^n = I and clock.shift = q^2 shift.clock, and the
/// Fourier matrix conjugates one into the other: shift = Q clock Q+.
struct SylvesterPair {
    int n = 0;
    OperatorMatrix clock;
    OperatorMatrix shift;
};

SylvesterPair sylvester_pair(int n);

enum class QNumberKind {
    nonsymmetric,  // (q^2k - 1)/(q^2 - 1); periodic mod n, complex
    symmetric      // (q^2k - q^-2k)/(q^2 - q^-2); real
};

/// The q-deformed integer [k] for q = exp(i*pi/n). The symmetric kind
/// evaluates the real ratio sin(2*pi*k/n)/sin(2*pi/n); at n = 2 that ratio
/// is 0/0 and the limit along the unit circle, k*(-1)^(k+1), is used.
cx q_number(int k, int n, QNumberKind kind);

/// The n x n lowering block B (superdiagonal entries sqrt([k]), k = 1..n-1)
/// and its raising partner B+. B+ is the plain transpose carrying the same
/// root entries, which makes B+B = diag([0..n-1]) an exact identity for
/// every kind; it coincides with the Hermitian adjoint exactly when all [k]
/// are real nonnegative.
std::pair<OperatorMatrix, OperatorMatrix> b_operators(int n, QNumberKind kind);

/// Max-entry residuals of the deformed commutation relations on the n x n
/// block: symmetric B with
///   BB+ - q^2  B+B = q^(-2N)      (sym_q2)
///   BB+ - q^-2 B+B = q^(+2N)      (sym_qinv2)
/// and non-symmetric B with
///   BB+ - q^2 B+B = I             (nonsym_q2)
///   BB+ -     B+B = q^(2N)        (nonsym_id)
/// Interior covers levels 0..n-2; the top level n-1 is reported separately
/// (the only nonzero corner defect occurs for the symmetric kind at n = 2).
struct AlgebraResiduals {
    double sym_q2_interior = 0.0;
    double sym_qinv2_interior = 0.0;
    double nonsym_q2_interior = 0.0;
    double nonsym_id_interior = 0.0;
    double sym_q2_top = 0.0;
    double sym_qinv2_top = 0.0;
    double nonsym_q2_top = 0.0;
    double nonsym_id_top = 0.0;
};

AlgebraResiduals algebra_residuals(int n);

/// Oscillator levels E_k = (hbar_omega/2) sin(2*pi/n (k+1/2)) / sin(pi/n),
/// k = 0..n-1.
std::vector<double> hamiltonian_spectrum(int n, double hbar_omega = 1.0);

/// H = (hbar_omega/2)([N] + [N+1]) with symmetric q-numbers, diagonal in the
/// kaleidoscope basis. Its diagonal reproduces hamiltonian_spectrum.
OperatorMatrix hamiltonian_matrix(int n, double hbar_omega = 1.0);

} // namespace kscope

#endif
