#pragma once

#include "ghzcert/lhv.hpp"
#include "ghzcert/tilted.hpp"

#include <vector>

namespace ghzcert {

struct AngleScanPoint {
    TiltAngles angles;
    double constraint_value = 0.0; // cos(theta) + sin(alpha)*sin(beta)
    bool feasible = false;         // LP verdict on the tilted quadruple
};

/// The grid_n^3 lattice of tilt angles: inclusive linspace per axis, with
/// the theta and alpha endpoints reduced mod 2*pi (so the last lattice value
/// wraps to 0) and beta clamped to [0, pi]. grid_n >= 2.
std::vector<TiltAngles> angle_grid(int grid_n);

/// LP feasibility of the tilted quadruple at every lattice point, in
/// lattice order. The OpenMP variant distributes points across threads;
/// both variants produce identical output.
std::vector<AngleScanPoint> angle_scan(int grid_n);
std::vector<AngleScanPoint> angle_scan_serial(int grid_n);

/// Certification of many states. Same serial/OpenMP pairing as angle_scan.
std::vector<CertificateReport> certify_batch(const std::vector<DensityMatrix>& states);
std::vector<CertificateReport> certify_batch_serial(const std::vector<DensityMatrix>& states);

struct NoiseScanRow {
    double p = 0.0;
    CertificateReport report;
};

/// Certification of the noise family on an inclusive steps-point grid of
/// the purity parameter. steps >= 2.
std::vector<NoiseScanRow> noise_scan(NoiseKind kind, int steps);

} // namespace ghzcert
