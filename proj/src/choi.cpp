#include "chanent/choi.hpp"

#include <cmath>
#include <random>

namespace chanent {

MatrixElements matrix_elements(const Channel& t) {
    const int n = t.dim();
    std::vector<Complex> v(static_cast<size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto img = t.apply(ComplexMatrix::unit(n, i, j));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    v[static_cast<size_t>(((i * n + j) * n + k)) * n + l] = img(l, k);
        }
    return MatrixElements(n, std::move(v));
}

RepresentativeOperator representative_operator(const Channel& t) {
    const int n = t.dim();
    const MatrixElements p = matrix_elements(t);

    RepresentativeOperator rho;
    rho.dim = n;
    rho.matrix = ComplexMatrix(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) rho.matrix(k * n + j, l * n + i) = p(i, j, k, l);

    rho.herm_defect = max_abs_diff(rho.matrix, rho.matrix.adjoint());
    // Spectrum of the Hermitian part; for honest channels the defect is ~0 and
    // this is the spectrum of rho itself.
    ComplexMatrix herm = rho.matrix;
    herm += rho.matrix.adjoint();
    herm *= Complex(0.5, 0.0);
    rho.spectrum = hermitian_eig(herm);
    rho.min_eigenvalue = rho.spectrum.eigenvalues.empty() ? 0.0 : rho.spectrum.eigenvalues.back();
    return rho;
}

Channel reconstruct(const RepresentativeOperator& rho) {
    const int n = rho.dim;
    const auto pt = partial_trace_second(rho.matrix, n);
    if (max_abs_diff(pt, ComplexMatrix::identity(n)) > 1e-10)
        throw ValidationError("reconstruct: partial trace of rho is not the identity");

    const int nn = n * n;
    ComplexMatrix superop(nn, nn);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const auto img =
                partial_trace_second(rho.matrix * kron(ComplexMatrix::identity(n),
                                                       ComplexMatrix::unit(n, i, j)),
                                     n)
                    .transpose();
            const auto vimg = vectorize(img);
            const int col = j * n + i;
            for (int r = 0; r < nn; ++r) superop(r, col) = vimg[r];
        }
    return Channel::superoperator(n, std::move(superop));
}

PropertyReport verify_properties(const Channel& t, std::uint64_t seed) {
    const int n = t.dim();
    const MatrixElements p = matrix_elements(t);
    PropertyReport rep;

    // (B) both variants, and realness of the elements
    double herm_dev = 0.0, literal_dev = 0.0, imag_max = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    herm_dev = std::max(herm_dev, std::abs(p(i, j, k, l) - std::conj(p(j, i, l, k))));
                    literal_dev = std::max(literal_dev, std::abs(p(i, j, k, l) - p(j, i, l, k)));
                    imag_max = std::max(imag_max, std::fabs(p(i, j, k, l).imag()));
                }
    rep.b = herm_dev <= 1e-10;
    rep.b_literal = literal_dev <= 1e-10;
    rep.elements_real = imag_max <= 1e-10;

    // (C) sum_i p(i,i,k,l) = delta_kl
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Complex s = 0.0;
            for (int i = 0; i < n; ++i) s += p(i, i, k, l);
            const double want = (k == l) ? 1.0 : 0.0;
            rep.c_max_deviation = std::max(rep.c_max_deviation, std::abs(s - Complex(want, 0.0)));
        }
    rep.c = rep.c_max_deviation <= 1e-10;

    // (A) positivity of rho plus 20 sampled rank-one quadratic forms
    const auto rho = representative_operator(t);
    bool a_ok = rho.positive_within(tol::psd_slack);
    std::mt19937_64 rng(seed);
    const auto uni = [&rng]() {
        return 2.0 * ((rng() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
    };
    for (int trial = 0; trial < 20 && a_ok; ++trial) {
        std::vector<Complex> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = Complex(uni(), uni());
            b[i] = Complex(uni(), uni());
        }
        Complex form = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        form += a[i] * std::conj(a[j]) * b[k] * std::conj(b[l]) * p(i, j, k, l);
        if (form.real() < -1e-9 || std::fabs(form.imag()) > 1e-9) a_ok = false;
    }
    rep.a = a_ok;
    return rep;
}

std::vector<ComplexMatrix> kraus_from_representative(const RepresentativeOperator& rho,
                                                     double cutoff) {
    const int n = rho.dim;
    std::vector<ComplexMatrix> ops;
    for (size_t m = 0; m < rho.spectrum.eigenvalues.size(); ++m) {
        const double lam = rho.spectrum.eigenvalues[m];
        if (lam <= cutoff) continue;
        const double w = std::sqrt(lam);
        // eigenvector reshaped first-factor-major, then transposed
        ComplexMatrix b(n, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                b(c, a) = w * rho.spectrum.eigenvectors(a * n + c, static_cast<int>(m));
        ops.push_back(std::move(b));
    }
    return ops;
}

bool is_extremal_choi(const Channel& t, double tolerance) {
    const auto rho = representative_operator(t);
    if (!rho.positive_within(tol::psd_slack))
        throw ValidationError("is_extremal_choi requires a completely positive channel");

    const auto ops = kraus_from_representative(rho, tolerance);
    const int n = t.dim();
    const int k = static_cast<int>(ops.size());
    if (k == 0) throw ValidationError("is_extremal_choi: channel has empty Kraus family");
    if (k * k > n * n) return false; // more products than the space can hold

    // normalized vectorizations of the products a_i^* a_j
    std::vector<std::vector<Complex>> prods;
    prods.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto prod = ops[i].adjoint() * ops[j];
            auto v = vectorize(prod);
            double norm = 0.0;
            for (const auto& z : v) norm += std::norm(z);
            norm = std::sqrt(norm);
            if (norm <= 1e-12) return false; // a vanishing product forces dependence
            for (auto& z : v) z /= norm;
            prods.push_back(std::move(v));
        }

    const int m = static_cast<int>(prods.size());
    ComplexMatrix gram(m, m);
    for (int u = 0; u < m; ++u)
        for (int w = 0; w < m; ++w) {
            Complex s = 0.0;
            for (size_t r = 0; r < prods[u].size(); ++r) s += std::conj(prods[u][r]) * prods[w][r];
            gram(u, w) = s;
        }
    const auto spec = hermitian_eig(gram);
    return spec.eigenvalues.back() > tolerance;
}

} // namespace chanent
