#ifndef KSCOPE_MATRIX_HPP
#define KSCOPE_MATRIX_HPP

#include <complex>
#include <vector>

namespace kscope {

using cx = std::complex<double>;

/// Dense complex square matrix, row-major. Sized for small operator blocks
/// (gates, clock/shift, ladder blocks), not large-scale linear algebra.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(int dim) : n_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static OperatorMatrix identity(int dim);

    int dim() const { return n_; }

    cx& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cx& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    OperatorMatrix adjoint() const;    // conjugate transpose
    OperatorMatrix transpose() const;  // plain transpose, no conjugation
    OperatorMatrix pow(int k) const;   // k >= 0

    /// max |entry|
    double max_abs() const;

    OperatorMatrix& operator+=(const OperatorMatrix& rhs);
    OperatorMatrix& operator-=(const OperatorMatrix& rhs);
    OperatorMatrix& operator*=(cx scale);

    friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
    friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
    friend OperatorMatrix operator*(cx scale, OperatorMatrix m) { return m *= scale; }
    friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

private:
    int n_ = 0;
    std::vector<cx> a_;
};

/// max |A[i][j] - B[i][j]|; dimensions must agree
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

} // namespace kscope

#endif
