#pragma once

#include <vector>

namespace ghzcert {

struct Phase1Result {
    bool feasible = false;
    std::vector<double> solution; // x with A x = b, x >= 0; empty when infeasible
};

/// Decides whether {x >= 0 : A x = b} is nonempty via a phase-1 simplex:
/// one artificial variable per equality row, Bland's rule pivoting, and a
/// feasibility verdict when the artificial objective reaches zero within
/// tol. When feasible, the returned point satisfies the equalities within
/// tol (residual-checked). A is row-major, m rows by n columns.
Phase1Result phase1_feasible(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b, double tol);

} // namespace ghzcert
