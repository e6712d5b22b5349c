#include "kscope/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace kscope {

OperatorMatrix OperatorMatrix::identity(int dim) {
    OperatorMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m.at(i, j) = std::conj(at(j, i));
    return m;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m.at(i, j) = at(j, i);
    return m;
}

OperatorMatrix OperatorMatrix::pow(int k) const {
    if (k < 0) throw std::invalid_argument("OperatorMatrix::pow: negative exponent");
    OperatorMatrix acc = identity(n_);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (const cx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("OperatorMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("OperatorMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cx scale) {
    for (cx& v : a_) v *= scale;
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw std::invalid_argument("OperatorMatrix: dimension mismatch");
    const int n = lhs.n_;
    OperatorMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cx lik = lhs.at(i, k);
            if (lik == cx{}) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

} // namespace kscope
