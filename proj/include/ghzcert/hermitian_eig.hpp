#pragma once

#include "ghzcert/complex_matrix.hpp"

#include <vector>

namespace ghzcert {

/// All real eigenvalues of a Hermitian matrix, sorted descending.
///
/// Cyclic Jacobi rotations on the complex Hermitian matrix; sweeps stop
/// once the off-diagonal Frobenius mass drops below 1e-14 (relative to
/// the matrix scale). Throws std::invalid_argument if the input deviates
/// from Hermiticity by more than 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

} // namespace ghzcert
