#include "ghzcert/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzcert {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("matrix dimension must be 2, 4 or 8, got " +
                                    std::to_string(dim));
    }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch: " +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(dim * dim, cplx(0.0, 0.0)) {
    check_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    check_same_dim(*this, other);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    check_same_dim(*this, other);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    check_same_dim(*this, other);
    double worst = 0.0;
    for (size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& e : entries_) worst = std::max(worst, std::abs(e));
    return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    if (na * nb > 8) {
        throw std::invalid_argument("Kronecker product dimension " +
                                    std::to_string(na * nb) + " exceeds 8");
    }
    ComplexMatrix c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return c;
}

} // namespace ghzcert
