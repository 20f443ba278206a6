#include "ghzcert/lhv.hpp"

#include "ghzcert/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzcert {

namespace {

constexpr double kFeasibilityTol = 1e-9;

const std::array<DichotomicObservable, 4>& event_observables() {
    static const std::array<DichotomicObservable, 4> obs = [] {
        const DichotomicObservable sx = pauli({1.0, 0.0, 0.0});
        const DichotomicObservable sy = pauli({0.0, 1.0, 0.0});
        auto three = [&](Setting a, Setting b, Setting c) {
            auto pick = [&](Setting s) -> const ComplexMatrix& {
                return s == Setting::X ? sx.matrix() : sy.matrix();
            };
            return DichotomicObservable(kron(kron(pick(a), pick(b)), pick(c)));
        };
        std::array<DichotomicObservable, 4> out = {
            three(ghz_event_settings[0][0], ghz_event_settings[0][1], ghz_event_settings[0][2]),
            three(ghz_event_settings[1][0], ghz_event_settings[1][1], ghz_event_settings[1][2]),
            three(ghz_event_settings[2][0], ghz_event_settings[2][1], ghz_event_settings[2][2]),
            three(ghz_event_settings[3][0], ghz_event_settings[3][1], ghz_event_settings[3][2]),
        };
        return out;
    }();
    return obs;
}

const DensityMatrix& cached_ghz() {
    static const DensityMatrix ghz = ghz_state();
    return ghz;
}

} // namespace

ProbabilityQuadruple::ProbabilityQuadruple(const std::array<double, 4>& q) : q_(q) {
    for (int k = 0; k < 4; ++k) {
        if (!(q_[k] >= -1e-10 && q_[k] <= 1.0 + 1e-10)) {
            throw std::invalid_argument("event probability q" + std::to_string(k + 1) +
                                        " = " + std::to_string(q_[k]) + " outside [0, 1]");
        }
    }
}

LocalModel::LocalModel(const std::array<double, 64>& weights) : weights_(weights) {
    double sum = 0.0;
    for (double w : weights_) {
        if (w < -1e-12) {
            throw std::invalid_argument("local model weight " + std::to_string(w) +
                                        " below -1e-12");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("local model weights sum to " + std::to_string(sum));
    }
}

std::array<double, 4> LocalModel::induced_probabilities() const {
    const auto& strategies = enumerate_strategies();
    std::array<double, 4> q = {0.0, 0.0, 0.0, 0.0};
    for (int s = 0; s < 64; ++s) {
        const EventIndicator e = indicator(strategies[s]);
        for (int k = 0; k < 4; ++k)
            if (e.bits[k]) q[k] += weights_[s];
    }
    return q;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::NonlocalByWitness: return "NonlocalByWitness";
        case Verdict::NonlocalByLP: return "NonlocalByLP";
        case Verdict::LocallyExplainableAtThisLevel: return "LocallyExplainableAtThisLevel";
    }
    return "?";
}

const std::array<DeterministicStrategy, 64>& enumerate_strategies() {
    static const std::array<DeterministicStrategy, 64> all = [] {
        std::array<DeterministicStrategy, 64> out{};
        for (int s = 0; s < 64; ++s)
            for (int bit = 0; bit < 6; ++bit)
                out[s].values[bit] = (s >> bit) & 1 ? -1 : +1;
        return out;
    }();
    return all;
}

EventIndicator indicator(const DeterministicStrategy& s) {
    EventIndicator e{};
    for (int k = 0; k < 4; ++k) {
        int product = 1;
        for (int particle = 0; particle < 3; ++particle)
            product *= s.value(particle, ghz_event_settings[k][particle]);
        e.bits[k] = (product == ghz_event_targets[k]);
    }
    return e;
}

FeasibilityResult ghz_feasible(const ProbabilityQuadruple& q) {
    const auto& strategies = enumerate_strategies();

    // Five equality rows: the four event probabilities and normalization.
    std::vector<std::vector<double>> a(5, std::vector<double>(64, 0.0));
    for (int s = 0; s < 64; ++s) {
        const EventIndicator e = indicator(strategies[s]);
        for (int k = 0; k < 4; ++k) a[k][s] = e.bits[k] ? 1.0 : 0.0;
        a[4][s] = 1.0;
    }
    std::vector<double> b(5);
    for (int k = 0; k < 4; ++k) b[k] = std::min(1.0, std::max(0.0, q[k]));
    b[4] = 1.0;

    const Phase1Result lp = phase1_feasible(a, b, kFeasibilityTol);
    FeasibilityResult result;
    result.feasible = lp.feasible;
    if (lp.feasible) {
        std::array<double, 64> w{};
        for (int s = 0; s < 64; ++s) w[s] = lp.solution[s];
        result.model = LocalModel(w);
    }
    return result;
}

double witness(double epsilon) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("trace distance must be nonnegative");
    }
    return 4.0 * epsilon - 1.0;
}

ProbabilityQuadruple quadruple_of_state(const DensityMatrix& rho) {
    const auto& obs = event_observables();
    std::array<double, 4> q{};
    for (int k = 0; k < 4; ++k)
        q[k] = outcome_probability(rho, obs[k], ghz_event_targets[k]);
    return ProbabilityQuadruple(q);
}

CertificateReport certify_state(const DensityMatrix& rho) {
    CertificateReport report;
    report.quadruple = quadruple_of_state(rho);
    report.epsilon = trace_distance(rho, cached_ghz());
    report.witness_value = witness(report.epsilon);

    FeasibilityResult lp = ghz_feasible(report.quadruple);
    report.lp_feasible = lp.feasible;
    report.model = std::move(lp.model);

    if (report.witness_value < 0.0) {
        report.verdict = Verdict::NonlocalByWitness;
    } else if (!report.lp_feasible) {
        report.verdict = Verdict::NonlocalByLP;
    } else {
        report.verdict = Verdict::LocallyExplainableAtThisLevel;
    }
    return report;
}

namespace {

// Bisects [0, 1] for the boundary of a predicate that holds below it and
// fails above it; returns the midpoint of the final bracket.
template <typename Pred>
double bisect_purity(Pred holds_at) {
    double lo = 0.0;
    double hi = 1.0;
    if (!holds_at(lo)) return 0.0;
    if (holds_at(hi)) return 1.0;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (holds_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double noise_threshold(NoiseKind kind) {
    return bisect_purity([kind](double p) {
        return ghz_feasible(quadruple_of_state(noise_state(kind, p))).feasible;
    });
}

double witness_noise_threshold(NoiseKind kind) {
    return bisect_purity([kind](double p) {
        return witness(trace_distance(noise_state(kind, p), cached_ghz())) >= 0.0;
    });
}

} // namespace ghzcert
