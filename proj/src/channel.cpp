#include "chanent/channel.hpp"

#include <cmath>

#include "chanent/choi.hpp"

namespace chanent {

StochasticMatrix::StochasticMatrix(int n, std::vector<double> entries)
    : n_(n), p_(std::move(entries)) {
    if (n <= 0) throw ValidationError("stochastic matrix dimension must be positive");
    if (p_.size() != static_cast<size_t>(n) * n)
        throw DimensionError("stochastic matrix entry count does not match n*n");
    for (double x : p_) {
        if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-12)
            throw ValidationError("stochastic matrix entries must lie in [0, 1]");
    }
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += (*this)(i, j);
        if (std::fabs(row - 1.0) > 1e-12)
            throw ValidationError("stochastic matrix rows must sum to 1");
    }
}

StochasticMatrix::StochasticMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<double> flat;
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw DimensionError("stochastic matrix must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    *this = StochasticMatrix(n, std::move(flat));
}

bool StochasticMatrix::is_deterministic(double tolerance) const {
    for (double x : p_)
        if (std::fabs(x) > tolerance && std::fabs(x - 1.0) > tolerance) return false;
    return true;
}

ComplexMatrix StochasticMatrix::to_complex() const {
    ComplexMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

DensityOperator::DensityOperator(ComplexMatrix theta) : theta_(std::move(theta)) {
    if (!theta_.is_square()) throw ValidationError("density operator must be square");
    n_ = theta_.rows();
    if (n_ == 0) throw ValidationError("density operator must be non-empty");
    if (!is_hermitian(theta_, 1e-10))
        throw ValidationError("density operator must be Hermitian");
    if (std::abs(theta_.trace() - Complex(1.0, 0.0)) > 1e-10)
        throw ValidationError("density operator must have unit trace");
    if (!is_psd(theta_, tol::psd_slack))
        throw ValidationError("density operator must be positive semidefinite");
}

DensityOperator DensityOperator::pure(const std::vector<Complex>& psi) {
    const int n = static_cast<int>(psi.size());
    double norm2 = 0.0;
    for (const auto& z : psi) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw ValidationError("pure state vector must be nonzero");
    ComplexMatrix theta(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) theta(i, j) = psi[i] * std::conj(psi[j]) / norm2;
    return DensityOperator(std::move(theta));
}

Complex DensityOperator::expectation(const ComplexMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_)
        throw DimensionError("dimension mismatch in state expectation");
    Complex s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += theta_(i, j) * x(j, i);
    return s;
}

Channel Channel::superoperator(int n, ComplexMatrix m) {
    if (n <= 0) throw ValidationError("channel dimension must be positive");
    if (m.rows() != n * n || m.cols() != n * n)
        throw DimensionError("superoperator must be n^2 x n^2");
    if (!m.all_finite()) throw ValidationError("superoperator entries must be finite");
    return Channel(n, Kind::superoperator, SuperopForm{std::move(m)});
}

Channel Channel::kraus(int n, std::vector<ComplexMatrix> ops) {
    if (n <= 0) throw ValidationError("channel dimension must be positive");
    if (ops.empty()) throw ValidationError("Kraus family must be non-empty");
    for (const auto& a : ops)
        if (a.rows() != n || a.cols() != n)
            throw DimensionError("Kraus operators must be n x n");
    return Channel(n, Kind::kraus, KrausForm{std::move(ops)});
}

Channel Channel::classical(StochasticMatrix s) {
    const int n = s.dim();
    return Channel(n, Kind::stochastic, StochasticForm{std::move(s)});
}

Channel Channel::state(DensityOperator theta) {
    const int n = theta.dim();
    return Channel(n, Kind::state, StateForm{std::move(theta)});
}

std::vector<Complex> vectorize(const ComplexMatrix& x) {
    const int n = x.rows();
    std::vector<Complex> v(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(j) * n + i] = x(i, j);
    return v;
}

ComplexMatrix unvectorize(const std::vector<Complex>& v, int n) {
    if (v.size() != static_cast<size_t>(n) * n)
        throw DimensionError("vector length does not match n*n");
    ComplexMatrix x(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = v[static_cast<size_t>(j) * n + i];
    return x;
}

ComplexMatrix Channel::apply(const ComplexMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_)
        throw DimensionError("dimension mismatch in channel application");

    if (const auto* f = std::get_if<SuperopForm>(&form_)) {
        const auto vin = vectorize(x);
        std::vector<Complex> vout(vin.size(), Complex(0.0, 0.0));
        const int nn = n_ * n_;
        for (int r = 0; r < nn; ++r) {
            Complex s = 0.0;
            for (int c = 0; c < nn; ++c) s += f->m(r, c) * vin[c];
            vout[r] = s;
        }
        return unvectorize(vout, n_);
    }
    if (const auto* f = std::get_if<KrausForm>(&form_)) {
        ComplexMatrix out(n_, n_);
        for (const auto& a : f->ops) out += a.adjoint() * x * a;
        return out;
    }
    if (const auto* f = std::get_if<StochasticForm>(&form_)) {
        // acts on the diagonal as the stochastic matrix, kills off-diagonals
        ComplexMatrix out(n_, n_);
        for (int i = 0; i < n_; ++i) {
            Complex s = 0.0;
            for (int j = 0; j < n_; ++j) s += f->s(i, j) * x(j, j);
            out(i, i) = s;
        }
        return out;
    }
    const auto& f = std::get<StateForm>(form_);
    ComplexMatrix out(n_, n_);
    const Complex val = f.theta.expectation(x);
    for (int i = 0; i < n_; ++i) out(i, i) = val;
    return out;
}

ComplexMatrix Channel::superoperator_matrix() const {
    if (const auto* f = std::get_if<SuperopForm>(&form_)) return f->m;
    const int nn = n_ * n_;
    ComplexMatrix m(nn, nn);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            const int col = j * n_ + i; // vec index of e_ij
            const auto img = vectorize(apply(ComplexMatrix::unit(n_, i, j)));
            for (int r = 0; r < nn; ++r) m(r, col) = img[r];
        }
    return m;
}

const StochasticMatrix& Channel::stochastic() const {
    if (const auto* f = std::get_if<StochasticForm>(&form_)) return f->s;
    throw ValidationError("channel is not in stochastic form");
}

const std::vector<ComplexMatrix>& Channel::kraus_ops() const {
    if (const auto* f = std::get_if<KrausForm>(&form_)) return f->ops;
    throw ValidationError("channel is not in Kraus form");
}

const DensityOperator& Channel::state_density() const {
    if (const auto* f = std::get_if<StateForm>(&form_)) return f->theta;
    throw ValidationError("channel is not in state form");
}

bool check_unital(const Channel& t) {
    const auto img = t.apply(ComplexMatrix::identity(t.dim()));
    return max_abs_diff(img, ComplexMatrix::identity(t.dim())) < 1e-10;
}

bool check_completely_positive(const Channel& t, double tolerance) {
    return representative_operator(t).positive_within(tolerance);
}

Channel state_channel(const DensityOperator& phi) {
    return Channel::state(phi);
}

Channel classical_embed(const StochasticMatrix& s) {
    return Channel::classical(s);
}

} // namespace chanent
