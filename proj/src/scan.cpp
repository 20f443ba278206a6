#include "ghzcert/scan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghzcert {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

AngleScanPoint scan_point(const TiltAngles& a) {
    AngleScanPoint point;
    point.angles = a;
    point.constraint_value = locality_constraint_value(a);
    point.feasible = ghz_feasible(tilted_quadruple(a)).feasible;
    return point;
}

} // namespace

std::vector<TiltAngles> angle_grid(int grid_n) {
    if (grid_n < 2) {
        throw std::invalid_argument("angle grid needs at least 2 points per axis");
    }
    const double dt = two_pi / (grid_n - 1);
    const double db = std::numbers::pi / (grid_n - 1);

    std::vector<TiltAngles> grid;
    grid.reserve(static_cast<size_t>(grid_n) * grid_n * grid_n);
    for (int i = 0; i < grid_n; ++i) {
        const double theta = std::fmod(i * dt, two_pi);
        for (int j = 0; j < grid_n; ++j) {
            const double alpha = std::fmod(j * dt, two_pi);
            for (int k = 0; k < grid_n; ++k) {
                const double beta = std::min(k * db, std::numbers::pi);
                grid.emplace_back(theta, alpha, beta);
            }
        }
    }
    return grid;
}

std::vector<AngleScanPoint> angle_scan(int grid_n) {
    const std::vector<TiltAngles> grid = angle_grid(grid_n);
    std::vector<AngleScanPoint> points(grid.size());
    const long count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        points[i] = scan_point(grid[i]);
    }
    return points;
}

std::vector<AngleScanPoint> angle_scan_serial(int grid_n) {
    const std::vector<TiltAngles> grid = angle_grid(grid_n);
    std::vector<AngleScanPoint> points(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        points[i] = scan_point(grid[i]);
    }
    return points;
}

std::vector<CertificateReport> certify_batch(const std::vector<DensityMatrix>& states) {
    std::vector<CertificateReport> reports(states.size());
    const long count = static_cast<long>(states.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
        reports[i] = certify_state(states[i]);
    }
    return reports;
}

std::vector<CertificateReport> certify_batch_serial(const std::vector<DensityMatrix>& states) {
    std::vector<CertificateReport> reports(states.size());
    for (size_t i = 0; i < states.size(); ++i) {
        reports[i] = certify_state(states[i]);
    }
    return reports;
}

std::vector<NoiseScanRow> noise_scan(NoiseKind kind, int steps) {
    if (steps < 2) {
        throw std::invalid_argument("noise scan needs at least 2 steps");
    }
    std::vector<DensityMatrix> states;
    states.reserve(steps);
    std::vector<double> purities(steps);
    for (int i = 0; i < steps; ++i) {
        purities[i] = static_cast<double>(i) / (steps - 1);
        states.push_back(noise_state(kind, purities[i]));
    }
    std::vector<CertificateReport> reports = certify_batch(states);

    std::vector<NoiseScanRow> rows(steps);
    for (int i = 0; i < steps; ++i) {
        rows[i].p = purities[i];
        rows[i].report = std::move(reports[i]);
    }
    return rows;
}

} // namespace ghzcert
