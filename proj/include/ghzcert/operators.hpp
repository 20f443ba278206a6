#pragma once

#include "ghzcert/complex_matrix.hpp"

#include <array>

namespace ghzcert {

/// Unit-trace positive-semidefinite Hermitian operator. All invariants are
/// checked once, at construction:
///   - Hermitian within 1e-12 (entrywise),
///   - trace equal to 1 within 1e-12,
///   - every eigenvalue >= -1e-10.
/// Instances are immutable and safe to share across threads.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return matrix_.dim(); }

private:
    ComplexMatrix matrix_;
};

/// Hermitian operator with spectrum contained in {+1, -1}: Hermitian within
/// 1e-12 and M^2 = I within 1e-10. Immutable after construction.
class DichotomicObservable {
public:
    explicit DichotomicObservable(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return matrix_.dim(); }

private:
    ComplexMatrix matrix_;
};

/// Spin component n_x sigma_x + n_y sigma_y + n_z sigma_z along a unit axis.
DichotomicObservable pauli(const std::array<double, 3>& axis);

/// Trace distance (1/2) sum_k |lambda_k(a - b)|, a metric with values in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Probability Tr[(I + v*obs)/2 * rho] of observing outcome v in {+1, -1}.
/// Results are clamped into [0, 1] only within 1e-10 slack.
double outcome_probability(const DensityMatrix& rho, const DichotomicObservable& obs, int v);

} // namespace ghzcert
