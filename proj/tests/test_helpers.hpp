#pragma once

#include <cmath>

#include "chanent/matrix.hpp"
#include "chanent/random.hpp"

namespace chanent::testing {

inline ComplexMatrix random_hermitian(SampleRng& rng, int n) {
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = rng.uniform(-2.0, 2.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex z(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

inline ComplexMatrix random_complex(SampleRng& rng, int n) {
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return a;
}

/// Eigenvalues of a 2x2 Hermitian matrix straight from the quadratic formula.
inline std::pair<double, double> eig2_oracle(const ComplexMatrix& a) {
    const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double half = 0.5 * (a(0, 0).real() - a(1, 1).real());
    const double r = std::sqrt(half * half + std::norm(a(0, 1)));
    return {mean + r, mean - r};
}

} // namespace chanent::testing
