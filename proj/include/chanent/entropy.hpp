#pragma once

#include "chanent/channel.hpp"

namespace chanent {

/// Entropy in natural-log units.
struct EntropyValue {
    double nats = 0.0;
    double bits() const;
};

/// -sum lambda_i ln(lambda_i) over the spectrum of a Hermitian PSD matrix.
/// Eigenvalues below the 1e-12 cutoff contribute nothing (0 ln 0 = 0);
/// an eigenvalue below -1e-9 is a contract violation.
EntropyValue eigen_entropy(const ComplexMatrix& a);

/// Entropy of a density operator: the infimum of mixing entropies over its
/// discrete decompositions, attained by the spectral one at finite dimension.
EntropyValue ohya_entropy(const DensityOperator& phi);

/// Entropy of the representative operator of a unital CP channel.
/// By default computed on rho_T itself (trace n); `normalized` instead uses
/// rho_T / n, which differs from the default by more than the ln(n) shift.
EntropyValue choi_entropy(const Channel& t, bool normalized = false);

} // namespace chanent
