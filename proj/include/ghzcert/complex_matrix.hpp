#pragma once

#include <complex>
#include <vector>

namespace ghzcert {

using cplx = std::complex<double>;

/// Dense row-major complex matrix of dimension 2, 4 or 8 (one, two or
/// three qubits). Qubit ordering: particle 1 is the most significant
/// tensor factor, so basis index b = 4*b1 + 2*b2 + b3 with |0> -> 0.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int row, int col) { return entries_[row * dim_ + col]; }
    const cplx& operator()(int row, int col) const { return entries_[row * dim_ + col]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx scalar) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    cplx trace() const;

    /// max_ij |A_ij - (A^dagger)_ij|, zero for an exactly Hermitian matrix.
    double hermiticity_defect() const;

    /// max_ij |A_ij - B_ij|
    double max_abs_diff(const ComplexMatrix& other) const;

    /// max_ij |A_ij|
    double max_abs() const;

private:
    int dim_;
    std::vector<cplx> entries_;
};

/// Kronecker product; the result dimension dim(a)*dim(b) must not exceed 8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace ghzcert
