#include "chanent/entropy.hpp"

#include <cmath>

#include "chanent/choi.hpp"

namespace chanent {

double EntropyValue::bits() const {
    return nats / M_LN2;
}

namespace {

double entropy_of_eigenvalues(const std::vector<double>& lam) {
    double h = 0.0;
    for (double x : lam) {
        if (x < -1e-9)
            throw ContractViolation("entropy: matrix has a negative eigenvalue");
        if (x >= 1e-12) h -= x * std::log(x);
    }
    return h;
}

} // namespace

EntropyValue eigen_entropy(const ComplexMatrix& a) {
    const Spectrum s = hermitian_eig(a);
    return {entropy_of_eigenvalues(s.eigenvalues)};
}

EntropyValue ohya_entropy(const DensityOperator& phi) {
    return eigen_entropy(phi.matrix());
}

EntropyValue choi_entropy(const Channel& t, bool normalized) {
    const auto rho = representative_operator(t);
    if (!normalized) return {entropy_of_eigenvalues(rho.spectrum.eigenvalues)};
    std::vector<double> lam = rho.spectrum.eigenvalues;
    for (double& x : lam) x /= t.dim();
    return {entropy_of_eigenvalues(lam)};
}

} // namespace chanent
