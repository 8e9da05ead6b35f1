#include "chanent/random.hpp"

#include <cmath>

namespace chanent {

StochasticMatrix random_stochastic(SampleRng& rng, int n) {
    std::vector<double> entries(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double e = rng.exponential();
            entries[static_cast<size_t>(i) * n + j] = e;
            sum += e;
        }
        double acc = 0.0;
        for (int j = 0; j < n - 1; ++j) {
            entries[static_cast<size_t>(i) * n + j] /= sum;
            acc += entries[static_cast<size_t>(i) * n + j];
        }
        // pin the row sum to exactly 1 against rounding
        entries[static_cast<size_t>(i) * n + n - 1] = 1.0 - acc;
    }
    return StochasticMatrix(n, std::move(entries));
}

DensityOperator random_pure_state(SampleRng& rng, int n) {
    std::vector<Complex> psi(n);
    for (auto& z : psi) z = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return DensityOperator::pure(psi);
}

ComplexMatrix random_unitary(SampleRng& rng, int n) {
    ComplexMatrix u = ComplexMatrix::identity(n);
    for (int round = 0; round < 2; ++round)
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double theta = rng.uniform(0.0, 2.0 * M_PI);
                const double phase = rng.uniform(0.0, 2.0 * M_PI);
                const double c = std::cos(theta), s = std::sin(theta);
                const Complex e(std::cos(phase), std::sin(phase));
                for (int i = 0; i < n; ++i) {
                    const Complex uip = u(i, p), uiq = u(i, q);
                    u(i, p) = c * uip - std::conj(e) * s * uiq;
                    u(i, q) = e * s * uip + c * uiq;
                }
            }
    // global phases on the columns
    for (int j = 0; j < n; ++j) {
        const double phase = rng.uniform(0.0, 2.0 * M_PI);
        const Complex e(std::cos(phase), std::sin(phase));
        for (int i = 0; i < n; ++i) u(i, j) *= e;
    }
    return u;
}

namespace {

DensityOperator density_with_spectrum(SampleRng& rng, int n, const std::vector<double>& lam) {
    const ComplexMatrix u = random_unitary(rng, n);
    ComplexMatrix theta(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < n; ++k) s += u(i, k) * lam[k] * std::conj(u(j, k));
            theta(i, j) = s;
        }
    // exact Hermitian symmetrization before validation
    for (int i = 0; i < n; ++i) {
        theta(i, i) = Complex(theta(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (theta(i, j) + std::conj(theta(j, i)));
            theta(i, j) = m;
            theta(j, i) = std::conj(m);
        }
    }
    return DensityOperator(std::move(theta));
}

std::vector<double> dirichlet_flat(SampleRng& rng, int n) {
    std::vector<double> lam(n);
    double sum = 0.0;
    for (auto& x : lam) {
        x = rng.exponential();
        sum += x;
    }
    double acc = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        lam[i] /= sum;
        acc += lam[i];
    }
    lam[n - 1] = 1.0 - acc;
    return lam;
}

} // namespace

DensityOperator random_mixed_state(SampleRng& rng, int n, double min_eigenvalue) {
    if (1.2 * min_eigenvalue * n >= 1.0)
        throw ValidationError("min eigenvalue too large for a unit-trace state");
    // mix a flat Dirichlet spectrum toward uniform far enough that every
    // eigenvalue clears the floor with margin: min lambda >= alpha / n
    std::vector<double> lam = dirichlet_flat(rng, n);
    const double alpha = 1.2 * min_eigenvalue * n;
    for (auto& x : lam) x = (1.0 - alpha) * x + alpha / n;
    return density_with_spectrum(rng, n, lam);
}

DensityOperator random_density(SampleRng& rng, int n) {
    return density_with_spectrum(rng, n, dirichlet_flat(rng, n));
}

Channel random_kraus_unital(SampleRng& rng, int n, int num_ops) {
    if (num_ops < 1) throw ValidationError("Kraus family needs at least one operator");
    std::vector<ComplexMatrix> ops;
    ComplexMatrix sum(n, n);
    for (int m = 0; m + 1 < num_ops; ++m) {
        ComplexMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        ops.push_back(std::move(a));
    }
    for (const auto& a : ops) sum += a.adjoint() * a;
    if (!ops.empty()) {
        // scale so sum a^* a = 0.8 * 1-ish, leaving a PSD deficit
        const auto spec = hermitian_eig(sum);
        const double top = spec.eigenvalues.front();
        const double scale = std::sqrt(0.8 / std::max(top, 1e-12));
        for (auto& a : ops) a *= Complex(scale, 0.0);
        sum = ComplexMatrix(n, n);
        for (const auto& a : ops) sum += a.adjoint() * a;
    }
    ComplexMatrix deficit = ComplexMatrix::identity(n) - sum;
    const auto spec = hermitian_eig(deficit);
    ComplexMatrix root(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < n; ++k) {
                const double lam = std::max(spec.eigenvalues[k], 0.0);
                s += spec.eigenvectors(i, k) * std::sqrt(lam) * std::conj(spec.eigenvectors(j, k));
            }
            root(i, j) = s;
        }
    ops.push_back(std::move(root));
    return Channel::kraus(n, std::move(ops));
}

} // namespace chanent
