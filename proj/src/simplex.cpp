#include "ghzcert/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ghzcert {

Phase1Result phase1_feasible(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b, double tol) {
    const int m = static_cast<int>(a.size());
    const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
    if (static_cast<int>(b.size()) != m) {
        throw std::invalid_argument("phase1_feasible: rhs length does not match row count");
    }

    // Tableau rows 0..m-1 hold the constraints, row m the artificial
    // objective; columns 0..n-1 the original variables, n..n+m-1 the
    // artificials, n+m the rhs. Rows are sign-flipped so the rhs is
    // nonnegative and the artificial basis starts feasible.
    const int cols = n + m + 1;
    const int rhs = n + m;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    for (int i = 0; i < m; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
        t[i][n + i] = 1.0;
        t[i][rhs] = sign * b[i];
    }
    // Objective: minimize the sum of artificials. Relative to the artificial
    // basis the reduced cost of column j is -sum_i t[i][j].
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += t[i][rhs];
        t[m][rhs] = -s; // objective value is -t[m][rhs]
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const double pivot_tol = 1e-11;
    // Bland's rule: lowest-index entering and leaving variables. Guarantees
    // termination; the iteration cap is a safety net only.
    const int max_iters = 10000;
    for (int iter = 0; iter < max_iters; ++iter) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (t[m][j] < -pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break; // optimal

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > pivot_tol) {
                const double ratio = t[i][rhs] / t[i][enter];
                if (ratio < best_ratio - pivot_tol ||
                    (std::abs(ratio - best_ratio) <= pivot_tol &&
                     (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) break; // unbounded cannot happen for phase 1; bail out

        const double pivot = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double factor = t[i][enter];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    Phase1Result result;
    const double objective = -t[m][rhs];
    if (objective > tol) return result;

    result.solution.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) result.solution[basis[i]] = std::max(0.0, t[i][rhs]);
    }
    // Guard against pivot drift: accept only if the point actually satisfies
    // the original equalities.
    for (int i = 0; i < m; ++i) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) lhs += a[i][j] * result.solution[j];
        if (std::abs(lhs - b[i]) > tol) {
            result.solution.clear();
            return result;
        }
    }
    result.feasible = true;
    return result;
}

} // namespace ghzcert
