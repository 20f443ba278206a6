#include "ghzcert/tilted.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ghzcert {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const DensityMatrix& cached_ghz() {
    static const DensityMatrix ghz = ghz_state();
    return ghz;
}

} // namespace

TiltAngles::TiltAngles(double theta_, double alpha_, double beta_)
    : theta(theta_), alpha(alpha_), beta(beta_) {
    if (!(theta >= 0.0 && theta < two_pi)) {
        throw std::invalid_argument("theta = " + std::to_string(theta) + " outside [0, 2*pi)");
    }
    if (!(alpha >= 0.0 && alpha < two_pi)) {
        throw std::invalid_argument("alpha = " + std::to_string(alpha) + " outside [0, 2*pi)");
    }
    if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
        throw std::invalid_argument("beta = " + std::to_string(beta) + " outside [0, pi]");
    }
}

std::pair<DichotomicObservable, DichotomicObservable> tilted_observables(const TiltAngles& a) {
    DichotomicObservable xbar = pauli({std::cos(a.theta), std::sin(a.theta), 0.0});
    DichotomicObservable ybar = pauli({std::sin(a.beta) * std::cos(a.alpha),
                                       std::sin(a.beta) * std::sin(a.alpha),
                                       std::cos(a.beta)});
    return {std::move(xbar), std::move(ybar)};
}

ProbabilityQuadruple tilted_quadruple(const TiltAngles& a) {
    const auto [xbar, ybar] = tilted_observables(a);
    const DichotomicObservable sx = pauli({1.0, 0.0, 0.0});
    const DichotomicObservable sy = pauli({0.0, 1.0, 0.0});

    std::array<double, 4> q{};
    for (int k = 0; k < 4; ++k) {
        const auto& first = ghz_event_settings[k][0] == Setting::X ? xbar : ybar;
        const auto& second = ghz_event_settings[k][1] == Setting::X ? sx : sy;
        const auto& third = ghz_event_settings[k][2] == Setting::X ? sx : sy;
        const DichotomicObservable obs(
            kron(kron(first.matrix(), second.matrix()), third.matrix()));
        q[k] = outcome_probability(cached_ghz(), obs, ghz_event_targets[k]);
    }
    return ProbabilityQuadruple(q);
}

double locality_constraint_value(const TiltAngles& a) {
    return std::cos(a.theta) + std::sin(a.alpha) * std::sin(a.beta);
}

bool locality_constraint_satisfied(const TiltAngles& a) {
    return locality_constraint_value(a) <= 1.0 + 1e-12;
}

ProbabilityQuadruple general_quadruple(const std::array<MeasurementAxes, 3>& axes,
                                       const DensityMatrix& rho) {
    std::array<std::array<DichotomicObservable, 2>, 3> party_obs = {{
        {pauli(axes[0].x_axis), pauli(axes[0].y_axis)},
        {pauli(axes[1].x_axis), pauli(axes[1].y_axis)},
        {pauli(axes[2].x_axis), pauli(axes[2].y_axis)},
    }};

    std::array<double, 4> q{};
    for (int k = 0; k < 4; ++k) {
        auto pick = [&](int party) -> const ComplexMatrix& {
            return party_obs[party][static_cast<int>(ghz_event_settings[k][party])].matrix();
        };
        const DichotomicObservable obs(kron(kron(pick(0), pick(1)), pick(2)));
        q[k] = outcome_probability(rho, obs, ghz_event_targets[k]);
    }
    return ProbabilityQuadruple(q);
}

} // namespace ghzcert
