#pragma once

#include "ghzcert/operators.hpp"

#include <cstdint>

namespace ghzcert {

enum class NoiseKind { White, Colored };

/// Projector onto (|000> + |111>)/sqrt(2): entries 1/2 at index pairs
/// (0,0), (0,7), (7,0), (7,7) and zero elsewhere.
DensityMatrix ghz_state();

/// p * P_GHZ + (1-p)/8 * I_8 for p in [0, 1].
DensityMatrix white_noise_state(double p);

/// p * P_GHZ + (1-p)/2 * (|000><000| + |111><111|) for p in [0, 1].
DensityMatrix colored_noise_state(double p);

DensityMatrix noise_state(NoiseKind kind, double p);

/// Seed-deterministic random state G G^dagger / Tr(G G^dagger) with
/// Gaussian-distributed entries of G. The Gaussian samples are produced by
/// Box-Muller on 53-bit uniforms from mt19937_64, so the output is
/// bit-stable across standard libraries.
DensityMatrix random_density(std::uint64_t seed);

/// The mixture t * direction + (1-t) * P_GHZ whose trace distance from the
/// GHZ state equals target_eps, using the exact linearity of mixing:
/// t = target_eps / trace_distance(direction, GHZ). Requires
/// 0 <= target_eps <= trace_distance(direction, GHZ).
DensityMatrix state_at_distance(double target_eps, const DensityMatrix& direction);

} // namespace ghzcert
