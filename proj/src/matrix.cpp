#include "chanent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chanent {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DimensionError(msg);
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    a_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match rows * cols");
    if (!all_finite()) throw ValidationError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged initializer for ComplexMatrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
    if (!all_finite()) throw ValidationError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::unit(int n, int i, int j) {
    require(i >= 0 && i < n && j >= 0 && j < n, "matrix unit index out of range");
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.a_) z = std::conj(z);
    return m;
}

Complex ComplexMatrix::trace() const {
    require(is_square(), "trace requires a square matrix");
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in matrix addition");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in matrix subtraction");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols_ == b.rows_, "shape mismatch in matrix product");
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("shape mismatch in max_abs_diff");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tolerance) {
    if (!a.is_square()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tolerance) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square())
        throw DimensionError("kron requires square factors");
    const int na = a.rows(), nb = b.rows();
    ComplexMatrix m(na * nb, na * nb);
    for (int k = 0; k < na; ++k)
        for (int l = 0; l < na; ++l) {
            const Complex akl = a(k, l);
            if (akl == Complex(0.0, 0.0)) continue;
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j) m(k * nb + i, l * nb + j) = akl * b(i, j);
        }
    return m;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, int n) {
    if (n <= 0 || !m.is_square() || m.rows() != n * n)
        throw DimensionError("partial_trace_second expects an (n*n) x (n*n) matrix");
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Complex s = 0.0;
            for (int i = 0; i < n; ++i) s += m(k * n + i, l * n + i);
            out(k, l) = s;
        }
    return out;
}

namespace {

// One Jacobi rotation zeroing a(p, q). Returns the unitary parameters
// c (real) and s*alpha (complex), where |alpha| = 1 carries the phase of a(p, q).
struct Rotation {
    double c;
    Complex salpha;
};

Rotation plane_rotation(double app, double aqq, Complex apq) {
    const double absb = std::abs(apq);
    const Complex alpha = apq / absb;
    const double tau = (aqq - app) / (2.0 * absb);
    // smaller root of t^2 + 2 tau t - 1 = 0
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c * alpha};
}

} // namespace

Spectrum hermitian_eig(const ComplexMatrix& input, double herm_tol) {
    if (!input.is_square()) throw DimensionError("hermitian_eig requires a square matrix");
    if (!is_hermitian(input, herm_tol))
        throw ContractViolation("hermitian_eig: input is not Hermitian within tolerance");

    const int n = input.rows();
    // Symmetrize to wash out the sub-tolerance asymmetry before iterating.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= tol::jacobi_off) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= tol::jacobi_off) continue;
                const auto [c, sa] = plane_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
                const Complex sac = std::conj(sa);
                // columns: col_p' = c col_p - conj(s alpha) col_q ; col_q' = (s alpha) col_p + c col_q
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - sac * aiq;
                    a(i, q) = sa * aip + c * aiq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - sac * viq;
                    v(i, q) = sa * vip + c * viq;
                }
                // rows: row_p' = c row_p - (s alpha) row_q ; row_q' = conj(s alpha) row_p + c row_q
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sa * aqj;
                    a(q, j) = sac * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        s.eigenvalues[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) s.eigenvectors(i, k) = v(i, order[k]);
    }
    return s;
}

bool is_psd(const ComplexMatrix& a, double tolerance) {
    const Spectrum s = hermitian_eig(a);
    return s.eigenvalues.empty() || s.eigenvalues.back() >= -tolerance;
}

} // namespace chanent
