#pragma once

// Shared test utilities: independent oracles, random object generators and
// a tiny process runner for exercising the CLI binary.

#include "ghzcert/complex_matrix.hpp"
#include "ghzcert/operators.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace test_helpers {

using ghzcert::ComplexMatrix;
using ghzcert::cplx;

// ---------------------------------------------------------------------------
// Oracles (independent of the library's eigensolver and simplex)
// ---------------------------------------------------------------------------

/// Eigenvalues of the Hermitian 2x2 block [[a, u], [conj(u), b]] by the
/// quadratic formula: mean +- sqrt(((a-b)/2)^2 + |u|^2).
inline std::array<double, 2> block_eigenvalues(double a, cplx u, double b) {
    const double mean = 0.5 * (a + b);
    const double radius = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(u));
    return {mean + radius, mean - radius};
}

namespace detail {

// Least-squares solve of (M^T M) x = M^T t for a 5-row, k-column system.
// Returns false when the normal matrix is (numerically) singular.
inline bool solve_normal_equations(const std::vector<std::array<double, 5>>& cols,
                                   const std::array<double, 5>& target,
                                   std::vector<double>& x) {
    const int k = static_cast<int>(cols.size());
    std::vector<std::vector<double>> m(k, std::vector<double>(k + 1, 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < 5; ++r) m[i][j] += cols[i][r] * cols[j][r];
        for (int r = 0; r < 5; ++r) m[i][k] += cols[i][r] * target[r];
    }
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int row = col + 1; row < k; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (std::abs(m[pivot][col]) < 1e-12) return false;
        std::swap(m[col], m[pivot]);
        for (int row = 0; row < k; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (int j = col; j <= k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    x.resize(k);
    for (int i = 0; i < k; ++i) x[i] = m[i][k] / m[i][i];
    return true;
}

} // namespace detail

/// Hull-membership oracle: is q a convex combination of the 8 achievable
/// event-indicator patterns (the odd-parity vectors of {0,1}^4)? Searches
/// every vertex subset of size <= 5 (Caratheodory bound in R^4) and solves
/// for barycentric weights directly, with no simplex involved.
inline bool hull_feasible(const std::array<double, 4>& q, double tol) {
    std::vector<std::array<double, 5>> vertices;
    for (int m = 0; m < 16; ++m) {
        const int weight = ((m >> 0) & 1) + ((m >> 1) & 1) + ((m >> 2) & 1) + ((m >> 3) & 1);
        if (weight % 2 == 1) {
            vertices.push_back({static_cast<double>((m >> 0) & 1),
                                static_cast<double>((m >> 1) & 1),
                                static_cast<double>((m >> 2) & 1),
                                static_cast<double>((m >> 3) & 1), 1.0});
        }
    }
    const std::array<double, 5> target = {q[0], q[1], q[2], q[3], 1.0};
    const int n = static_cast<int>(vertices.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 5) continue;
        std::vector<std::array<double, 5>> cols;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) cols.push_back(vertices[i]);

        std::vector<double> weights;
        if (!detail::solve_normal_equations(cols, target, weights)) continue;

        bool ok = true;
        for (double w : weights)
            if (w < -tol) ok = false;
        for (int r = 0; r < 5 && ok; ++r) {
            double lhs = 0.0;
            for (size_t i = 0; i < cols.size(); ++i) lhs += cols[i][r] * weights[i];
            if (std::abs(lhs - target[r]) > tol) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Random generators (seeded, deterministic)
// ---------------------------------------------------------------------------

inline double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    double u;
    do {
        u = uniform(rng);
    } while (u == 0.0);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform(rng));
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = cplx(gaussian(rng), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const cplx e(gaussian(rng), gaussian(rng));
            h(i, j) = e;
            h(j, i) = std::conj(e);
        }
    }
    return h;
}

/// Rank-k orthogonal projector built by Gram-Schmidt on random vectors.
inline ComplexMatrix random_projector(std::mt19937_64& rng, int dim, int rank) {
    std::vector<std::vector<cplx>> basis;
    while (static_cast<int>(basis.size()) < rank) {
        std::vector<cplx> v(dim);
        for (auto& e : v) e = cplx(gaussian(rng), gaussian(rng));
        for (const auto& b : basis) {
            cplx overlap(0.0, 0.0);
            for (int i = 0; i < dim; ++i) overlap += std::conj(b[i]) * v[i];
            for (int i = 0; i < dim; ++i) v[i] -= overlap * b[i];
        }
        double norm = 0.0;
        for (const auto& e : v) norm += std::norm(e);
        norm = std::sqrt(norm);
        if (norm < 1e-6) continue; // rejected: (numerically) dependent draw
        for (auto& e : v) e /= norm;
        basis.push_back(std::move(v));
    }
    ComplexMatrix p(dim);
    for (const auto& b : basis)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) p(i, j) += b[i] * std::conj(b[j]);
    return p;
}

inline std::array<double, 3> random_unit_axis(std::mt19937_64& rng) {
    while (true) {
        std::array<double, 3> v = {gaussian(rng), gaussian(rng), gaussian(rng)};
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (norm < 1e-6) continue;
        for (auto& c : v) c /= norm;
        return v;
    }
}

// ---------------------------------------------------------------------------
// Process + filesystem helpers for CLI-facing tests
// ---------------------------------------------------------------------------

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, capturing stdout (stderr too when merge_stderr).
inline CommandResult run_command(const std::string& command, bool merge_stderr = false) {
    const std::string full = merge_stderr ? command + " 2>&1" : command + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + full);
    CommandResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Value of "key=..." in one-key-per-line machine output; throws if absent.
inline std::string machine_value(const std::string& output, const std::string& key) {
    const std::string needle = key + "=";
    size_t pos = 0;
    while (pos < output.size()) {
        const size_t eol = output.find('\n', pos);
        const std::string line = output.substr(pos, eol == std::string::npos ? eol : eol - pos);
        if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    throw std::runtime_error("key '" + key + "' not found in output:\n" + output);
}

inline double machine_double(const std::string& output, const std::string& key) {
    return std::stod(machine_value(output, key));
}

class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        path_ = base / ("ghzcert_tests_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

inline std::string quote(const std::string& path) { return "'" + path + "'"; }

} // namespace test_helpers
