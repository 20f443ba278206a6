#include "ghzcert/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace ghzcert {

namespace {

void check_purity(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("purity parameter p = " + std::to_string(p) +
                                    " outside [0, 1]");
    }
}

ComplexMatrix ghz_projector() {
    ComplexMatrix m(8);
    m(0, 0) = 0.5;
    m(0, 7) = 0.5;
    m(7, 0) = 0.5;
    m(7, 7) = 0.5;
    return m;
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    double u;
    do {
        u = canonical(rng);
    } while (u == 0.0);
    const double v = canonical(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

} // namespace

DensityMatrix ghz_state() {
    return DensityMatrix(ghz_projector());
}

DensityMatrix white_noise_state(double p) {
    check_purity(p);
    ComplexMatrix m = cplx(p, 0.0) * ghz_projector();
    const double background = (1.0 - p) / 8.0;
    for (int i = 0; i < 8; ++i) m(i, i) += background;
    return DensityMatrix(m);
}

DensityMatrix colored_noise_state(double p) {
    check_purity(p);
    ComplexMatrix m = cplx(p, 0.0) * ghz_projector();
    const double background = (1.0 - p) / 2.0;
    m(0, 0) += background;
    m(7, 7) += background;
    return DensityMatrix(m);
}

DensityMatrix noise_state(NoiseKind kind, double p) {
    return kind == NoiseKind::White ? white_noise_state(p) : colored_noise_state(p);
}

DensityMatrix random_density(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ComplexMatrix g(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            g(i, j) = cplx(gaussian(rng), gaussian(rng));

    ComplexMatrix gram = g * g.adjoint();
    const double tr = gram.trace().real();
    gram *= cplx(1.0 / tr, 0.0);
    // Gram construction can leave ~1e-16 asymmetry; symmetrize exactly.
    ComplexMatrix sym(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            sym(i, j) = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
    for (int i = 0; i < 8; ++i) sym(i, i) = cplx(sym(i, i).real(), 0.0);
    return DensityMatrix(sym);
}

DensityMatrix state_at_distance(double target_eps, const DensityMatrix& direction) {
    if (target_eps < 0.0) {
        throw std::invalid_argument("target trace distance must be nonnegative");
    }
    const DensityMatrix ghz = ghz_state();
    if (target_eps == 0.0) return ghz;

    const double reach = trace_distance(direction, ghz);
    if (reach <= 0.0 || target_eps > reach) {
        throw std::invalid_argument("target distance " + std::to_string(target_eps) +
                                    " unreachable along this direction (max " +
                                    std::to_string(reach) + ")");
    }
    const double t = target_eps / reach;
    return DensityMatrix(cplx(t, 0.0) * direction.matrix() +
                         cplx(1.0 - t, 0.0) * ghz.matrix());
}

} // namespace ghzcert
