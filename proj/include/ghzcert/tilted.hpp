#pragma once

#include "ghzcert/lhv.hpp"
#include "ghzcert/operators.hpp"

#include <array>
#include <utility>

namespace ghzcert {

/// Angles of observer 1's misaligned measurement directions:
/// theta in [0, 2*pi) for the tilted x direction, (alpha, beta) spherical
/// angles in [0, 2*pi) x [0, pi] for the tilted y direction.
struct TiltAngles {
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    TiltAngles() = default;
    TiltAngles(double theta_, double alpha_, double beta_);
};

/// The tilted spin observables
///   sigma_xbar = cos(theta) sigma_x + sin(theta) sigma_y
///   sigma_ybar = sin(beta)cos(alpha) sigma_x + sin(beta)sin(alpha) sigma_y
///                + cos(beta) sigma_z
std::pair<DichotomicObservable, DichotomicObservable> tilted_observables(const TiltAngles& a);

/// Probabilities of the four GHZ events on the pure GHZ state with observer
/// 1 measuring along the tilted directions and observers 2, 3 along the
/// ideal x and y axes. Closed form: q1 = q2 = 1 - (1 - cos theta)/2 and
/// q3 = q4 = 1 - (1 - sin alpha sin beta)/2.
ProbabilityQuadruple tilted_quadruple(const TiltAngles& a);

/// cos(theta) + sin(alpha) sin(beta), the quantity a local model caps at 1.
double locality_constraint_value(const TiltAngles& a);

/// Whether cos(theta) + sin(alpha) sin(beta) <= 1; the boundary (within
/// 1e-12) counts as satisfied.
bool locality_constraint_satisfied(const TiltAngles& a);

/// One party's pair of measurement directions (unit 3-vectors).
struct MeasurementAxes {
    std::array<double, 3> x_axis{1.0, 0.0, 0.0};
    std::array<double, 3> y_axis{0.0, 1.0, 0.0};
};

inline constexpr MeasurementAxes ideal_axes{};

/// Probabilities of the four GHZ events with every party's (x, y)
/// observables replaced by spin components along the given axes. Reduces to
/// quadruple_of_state(rho) for ideal axes and to tilted_quadruple when only
/// party 1 deviates and rho is the GHZ state.
ProbabilityQuadruple general_quadruple(const std::array<MeasurementAxes, 3>& axes,
                                       const DensityMatrix& rho);

} // namespace ghzcert
