#include "ghzcert/operators.hpp"

#include "ghzcert/hermitian_eig.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ghzcert {

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.hermiticity_defect() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian within 1e-12");
    }
    const cplx tr = matrix_.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace differs from 1 by more than 1e-12");
    }
    const auto eig = hermitian_eigenvalues(matrix_);
    if (eig.back() < -1e-10) {
        throw std::invalid_argument("density matrix has eigenvalue " +
                                    std::to_string(eig.back()) + " below -1e-10");
    }
}

DichotomicObservable::DichotomicObservable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.hermiticity_defect() > 1e-12) {
        throw std::invalid_argument("dichotomic observable is not Hermitian within 1e-12");
    }
    const ComplexMatrix square = matrix_ * matrix_;
    if (square.max_abs_diff(ComplexMatrix::identity(matrix_.dim())) > 1e-10) {
        throw std::invalid_argument("dichotomic observable does not square to the identity");
    }
}

DichotomicObservable pauli(const std::array<double, 3>& axis) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("pauli axis must be a unit vector");
    }
    ComplexMatrix m(2);
    m(0, 0) = cplx(axis[2], 0.0);
    m(0, 1) = cplx(axis[0], -axis[1]);
    m(1, 0) = cplx(axis[0], axis[1]);
    m(1, 1) = cplx(-axis[2], 0.0);
    return DichotomicObservable(m);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    const ComplexMatrix diff = a.matrix() - b.matrix();
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(diff)) sum += std::abs(lambda);
    return 0.5 * sum;
}

double outcome_probability(const DensityMatrix& rho, const DichotomicObservable& obs, int v) {
    if (v != 1 && v != -1) {
        throw std::invalid_argument("outcome value must be +1 or -1");
    }
    if (rho.dim() != obs.dim()) {
        throw std::invalid_argument("state and observable dimensions differ");
    }
    // Tr[(I + v*obs)/2 * rho] = (1 + v * Tr[obs * rho]) / 2
    const double expectation = (obs.matrix() * rho.matrix()).trace().real();
    const double p = 0.5 * (1.0 + static_cast<double>(v) * expectation);
    if (p < -1e-10 || p > 1.0 + 1e-10) {
        throw std::logic_error("outcome probability " + std::to_string(p) +
                               " escapes [0,1] beyond tolerance");
    }
    return std::min(1.0, std::max(0.0, p));
}

} // namespace ghzcert
