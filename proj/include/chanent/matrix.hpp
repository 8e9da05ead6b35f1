#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "chanent/errors.hpp"

namespace chanent {

using Complex = std::complex<double>;

// Default numerical tolerances. Everything is overridable per call.
namespace tol {
inline constexpr double hermitian = 1e-9;     // max |A - A*| accepted as Hermitian
inline constexpr double eig_residual = 1e-9;  // reconstruction residual of the eigensolver
inline constexpr double psd_slack = 1e-9;     // eigenvalues above -psd_slack count as >= 0
inline constexpr double jacobi_off = 1e-12;   // off-diagonal sweep threshold
} // namespace tol

/// Dense square-or-rectangular complex matrix, row-major storage.
/// Values are immutable in spirit: every operation returns a fresh matrix,
/// so instances can be shared freely across threads.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }
    /// Matrix unit e_ij: single 1 at row i, column j.
    static ComplexMatrix unit(int n, int i, int j);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Complex>& data() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_, cols_;
    std::vector<Complex> a_;
};

/// Largest entrywise |a - b|; throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tolerance = tol::hermitian);

/// Kronecker product. Basis ordering of the product space is first-factor
/// major: basis vector (k of a) x (i of b) maps to index k * dim(b) + i,
/// so block (k, l) of the result equals a(k, l) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out the second tensor factor of an (n*n) x (n*n) matrix laid out in
/// the kron() ordering: result(k, l) = sum_i m(k*n + i, l*n + i).
/// Uses the unnormalized trace, so partial_trace_second(kron(x, y)) = tr(y) * x.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, int n);

/// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
    std::vector<double> eigenvalues; // sorted descending
    ComplexMatrix eigenvectors;      // orthonormal columns, matching order
};

/// Cyclic Jacobi eigensolver for Hermitian matrices (intended for dim <= 16).
/// Deterministic: identical input bits give identical output bits.
/// Throws ContractViolation when the input is not Hermitian within herm_tol.
Spectrum hermitian_eig(const ComplexMatrix& a, double herm_tol = tol::hermitian);

/// True iff every eigenvalue of the Hermitian matrix a is >= -tolerance.
bool is_psd(const ComplexMatrix& a, double tolerance = tol::psd_slack);

} // namespace chanent
