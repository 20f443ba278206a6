#pragma once

#include "ghzcert/operators.hpp"
#include "ghzcert/states.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace ghzcert {

enum class Setting { X = 0, Y = 1 };

/// The four GHZ events: which spin component each party measures, and the
/// product outcome that the GHZ state predicts with certainty.
///   event 1: XXX = +1,  event 2: XYY = -1,  event 3: YXY = -1,  event 4: YYX = -1
inline constexpr std::array<std::array<Setting, 3>, 4> ghz_event_settings{{
    {Setting::X, Setting::X, Setting::X},
    {Setting::X, Setting::Y, Setting::Y},
    {Setting::Y, Setting::X, Setting::Y},
    {Setting::Y, Setting::Y, Setting::X},
}};
inline constexpr std::array<int, 4> ghz_event_targets{+1, -1, -1, -1};

/// One dispersion-free value assignment: v(particle, setting) in {+1, -1}
/// for particles 0..2 and settings {X, Y}.
struct DeterministicStrategy {
    std::array<int, 6> values; // index 2*particle + setting

    int value(int particle, Setting setting) const {
        return values[2 * particle + static_cast<int>(setting)];
    }
};

/// Which of the four GHZ events a strategy satisfies.
struct EventIndicator {
    std::array<bool, 4> bits;

    int bit_sum() const { return bits[0] + bits[1] + bits[2] + bits[3]; }
};

/// The four probabilities (q1..q4) of the GHZ events, each within
/// [0 - 1e-10, 1 + 1e-10] (checked at construction).
class ProbabilityQuadruple {
public:
    ProbabilityQuadruple() : q_{0.0, 0.0, 0.0, 0.0} {}
    explicit ProbabilityQuadruple(const std::array<double, 4>& q);

    double operator[](int k) const { return q_[k]; }
    const std::array<double, 4>& values() const { return q_; }
    double sum() const { return q_[0] + q_[1] + q_[2] + q_[3]; }

private:
    std::array<double, 4> q_;
};

/// Probability mass over the 64 deterministic strategies: weights >= -1e-12
/// summing to 1 within 1e-9 (checked at construction).
class LocalModel {
public:
    explicit LocalModel(const std::array<double, 64>& weights);

    const std::array<double, 64>& weights() const { return weights_; }

    /// Event probabilities this model induces: sum_s w_s * e_k(s).
    std::array<double, 4> induced_probabilities() const;

private:
    std::array<double, 64> weights_;
};

enum class Verdict { NonlocalByWitness, NonlocalByLP, LocallyExplainableAtThisLevel };

std::string_view to_string(Verdict v);

struct CertificateReport {
    double epsilon = 0.0;
    double witness_value = 0.0; // 4*epsilon - 1
    ProbabilityQuadruple quadruple;
    bool lp_feasible = false;
    std::optional<LocalModel> model; // present iff lp_feasible
    Verdict verdict = Verdict::LocallyExplainableAtThisLevel;
};

/// All 2^6 = 64 strategies in canonical order: strategy s has
/// v(particle, setting) = -1 exactly when bit (2*particle + setting) of s
/// is set, so index 0 is the all-(+1) strategy.
const std::array<DeterministicStrategy, 64>& enumerate_strategies();

/// e_k = [the strategy's outcome product for event k equals its target].
EventIndicator indicator(const DeterministicStrategy& s);

struct FeasibilityResult {
    bool feasible = false;
    std::optional<LocalModel> model;
};

/// Existence of weights w >= 0, sum w = 1, with sum_s w_s e_k(s) = q_k for
/// all four events, each within 1e-9; decided by an in-repo phase-1 simplex
/// over the 64 strategies. Infeasibility certifies that no local
/// deterministic model reproduces these four probabilities.
FeasibilityResult ghz_feasible(const ProbabilityQuadruple& q);

/// 4*epsilon - 1. A negative value certifies that no local deterministic
/// model exists for any state at trace distance epsilon from GHZ.
double witness(double epsilon);

/// Exact probabilities of the four GHZ events for this state.
ProbabilityQuadruple quadruple_of_state(const DensityMatrix& rho);

/// Full certification: trace distance to GHZ, witness sign, event
/// quadruple, LP feasibility and the combined verdict.
CertificateReport certify_state(const DensityMatrix& rho);

/// Critical purity p* of the noise family under the LP test, located by
/// bisection over [0, 1]: feasible below p*, infeasible above, |error| <= 1e-6.
double noise_threshold(NoiseKind kind);

/// Critical purity where the witness 4*eps(p) - 1 changes sign (the
/// bound-based argument); same bisection contract as noise_threshold.
double witness_noise_threshold(NoiseKind kind);

} // namespace ghzcert
