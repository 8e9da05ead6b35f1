#pragma once

#include <cstdint>
#include <random>

#include "chanent/channel.hpp"

namespace chanent {

/// Seedable generator with a pinned algorithm (mt19937_64 plus an explicit
/// 53-bit uniform), so identical seeds give identical samples on every
/// platform. The standard-library distributions are avoided on purpose:
/// their output is implementation-defined.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return (eng_() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard exponential via inversion.
    double exponential() { return -std::log(1.0 - uniform()); }

private:
    std::mt19937_64 eng_;
};

/// Row-stochastic matrix with rows drawn from a flat Dirichlet
/// (normalized standard exponentials).
StochasticMatrix random_stochastic(SampleRng& rng, int n);

/// Haar-ish random pure state (normalized complex Gaussian-free vector:
/// uniform box components are enough for test coverage).
DensityOperator random_pure_state(SampleRng& rng, int n);

/// Random full-rank density operator with all eigenvalues >= min_eigenvalue.
DensityOperator random_mixed_state(SampleRng& rng, int n, double min_eigenvalue);

/// Random density operator with a flat Dirichlet spectrum.
DensityOperator random_density(SampleRng& rng, int n);

/// Random unitary as a product of complex plane rotations.
ComplexMatrix random_unitary(SampleRng& rng, int n);

/// Random unital CP channel: num_ops - 1 free Kraus operators scaled to keep
/// sum a_i^* a_i strictly below 1, completed by the positive square root of
/// the deficit.
Channel random_kraus_unital(SampleRng& rng, int n, int num_ops);

} // namespace chanent
