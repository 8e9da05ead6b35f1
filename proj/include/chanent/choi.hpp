#pragma once

#include <cstdint>
#include <vector>

#include "chanent/channel.hpp"

namespace chanent {

/// The n^4 matrix elements p(i,j,k,l) = (T(e_ij) phi_k, phi_l) of a channel,
/// taken in the inner product linear in its first argument, so
/// p(i,j,k,l) is entry (row l, column k) of the image T(e_ij).
class MatrixElements {
public:
    MatrixElements(int n, std::vector<Complex> values) : n_(n), v_(std::move(values)) {}

    int dim() const { return n_; }
    const Complex& operator()(int i, int j, int k, int l) const {
        return v_[static_cast<size_t>(((i * n_ + j) * n_ + k)) * n_ + l];
    }

private:
    int n_;
    std::vector<Complex> v_;
};

MatrixElements matrix_elements(const Channel& t);

/// The representative operator rho_T on the doubled space: the unique operator
/// with tr_2(rho_T) = 1 whose conditional trace reproduces the channel.
///
/// Layout contract (first-factor-major basis of kron()):
///     rho_T(k*n + j, l*n + i) = p(i,j,k,l)
/// which makes rho_T positive semidefinite exactly when the channel is
/// completely positive, and diagonal with the stochastic entries for
/// classical channels. The channel is recovered as
///     T(x) = transpose(partial_trace_second(rho_T * kron(1, x))).
struct RepresentativeOperator {
    int dim = 0;             // n; the matrix is n^2 x n^2
    ComplexMatrix matrix;
    Spectrum spectrum;       // of the Hermitian part; descending
    double min_eigenvalue = 0.0;
    double herm_defect = 0.0; // max |rho - rho*| entry

    /// Validity marker: PSD within the tolerance (and Hermitian).
    bool positive_within(double tolerance = tol::psd_slack) const {
        return herm_defect <= tol::hermitian && min_eigenvalue >= -tolerance;
    }
};

/// Construction never throws for structurally valid channels; a non-CP input
/// simply yields an operator whose positivity marker is false.
RepresentativeOperator representative_operator(const Channel& t);

/// Invert the representation: returns a superoperator-form channel.
/// Throws ValidationError when tr_2(rho) deviates from 1 beyond 1e-10.
Channel reconstruct(const RepresentativeOperator& rho);

/// Report on the three structural properties of the matrix elements.
struct PropertyReport {
    bool a = false;          // rho_T PSD and sampled quadratic forms non-negative
    bool b = false;          // Hermiticity: p(i,j,k,l) = conj(p(j,i,l,k))
    bool c = false;          // sum_i p(i,i,k,l) = delta_kl within 1e-10
    bool b_literal = false;  // p(i,j,k,l) = p(j,i,l,k) without conjugation
    bool elements_real = false; // all matrix elements real (b_literal only meaningful then)
    double c_max_deviation = 0.0;
};

PropertyReport verify_properties(const Channel& t, std::uint64_t seed = 42);

/// Kraus family extracted from the eigendecomposition of rho_T;
/// eigenvalues below cutoff are dropped.
std::vector<ComplexMatrix> kraus_from_representative(const RepresentativeOperator& rho,
                                                     double cutoff = 1e-10);

/// Extremality test for a unital CP channel: the Kraus family {a_i} extracted
/// from rho_T makes the channel extremal iff the products a_i^* a_j are
/// linearly independent. Rank decided by the smallest Gram eigenvalue of the
/// normalized product vectorizations against `tolerance`.
bool is_extremal_choi(const Channel& t, double tolerance = 1e-8);

} // namespace chanent
