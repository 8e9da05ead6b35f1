#pragma once

#include <variant>
#include <vector>

#include "chanent/matrix.hpp"

namespace chanent {

/// Real square matrix with non-negative entries and unit row sums:
/// the classical (Markov) channel acting on the diagonal subalgebra.
class StochasticMatrix {
public:
    StochasticMatrix() : n_(0) {}
    /// Validates row sums (within 1e-12) and entry range; throws ValidationError.
    StochasticMatrix(int n, std::vector<double> entries);
    StochasticMatrix(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return p_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return p_; }

    /// True iff every entry is 0 or 1 within tolerance (a deterministic map).
    bool is_deterministic(double tolerance = 1e-9) const;

    ComplexMatrix to_complex() const;

private:
    int n_;
    std::vector<double> p_;
};

/// Unit-trace positive operator representing a normal state.
class DensityOperator {
public:
    DensityOperator() : n_(0) {}
    /// Validates Hermiticity, positivity and unit trace (within 1e-10); throws ValidationError.
    explicit DensityOperator(ComplexMatrix theta);

    /// Rank-one state built from a (not necessarily normalized) vector.
    static DensityOperator pure(const std::vector<Complex>& psi);

    int dim() const { return n_; }
    const ComplexMatrix& matrix() const { return theta_; }

    /// Expectation value tr(theta * x).
    Complex expectation(const ComplexMatrix& x) const;

private:
    int n_;
    ComplexMatrix theta_;
};

/// A linear map on n x n matrices, stored in one of four interchangeable forms.
/// Structural validation happens at construction; unitality and complete
/// positivity are separate checks so that counterexample maps (e.g. the
/// transpose) remain constructible.
class Channel {
public:
    enum class Kind { superoperator, kraus, stochastic, state };

    /// n^2 x n^2 matrix acting on column-stacked matrices:
    /// vec(x)[i + n*j] = x(i, j), vec(T(x)) = m * vec(x).
    static Channel superoperator(int n, ComplexMatrix m);
    /// T(x) = sum_i a_i^* x a_i over the family {a_i} of n x n matrices.
    static Channel kraus(int n, std::vector<ComplexMatrix> ops);
    /// Classical channel on the diagonal subalgebra; annihilates off-diagonals.
    static Channel classical(StochasticMatrix s);
    /// State channel x -> tr(theta x) * 1.
    static Channel state(DensityOperator theta);

    Kind kind() const { return kind_; }
    int dim() const { return n_; }

    ComplexMatrix apply(const ComplexMatrix& x) const;

    /// Superoperator matrix of this channel (computed on demand for other forms).
    ComplexMatrix superoperator_matrix() const;

    const StochasticMatrix& stochastic() const;
    const std::vector<ComplexMatrix>& kraus_ops() const;
    const DensityOperator& state_density() const;

private:
    struct SuperopForm { ComplexMatrix m; };
    struct KrausForm { std::vector<ComplexMatrix> ops; };
    struct StochasticForm { StochasticMatrix s; };
    struct StateForm { DensityOperator theta; };

    Channel(int n, Kind k, std::variant<SuperopForm, KrausForm, StochasticForm, StateForm> f)
        : n_(n), kind_(k), form_(std::move(f)) {}

    int n_;
    Kind kind_;
    std::variant<SuperopForm, KrausForm, StochasticForm, StateForm> form_;
};

/// Column-stacking vectorization, vec(x)[i + n*j] = x(i, j).
std::vector<Complex> vectorize(const ComplexMatrix& x);
ComplexMatrix unvectorize(const std::vector<Complex>& v, int n);

/// ||T(1) - 1||_max < 1e-10.
bool check_unital(const Channel& t);

/// Positivity of the representative operator within tolerance.
bool check_completely_positive(const Channel& t, double tolerance = tol::psd_slack);

/// The ucp map x -> tr(theta x) * 1 induced by a state.
Channel state_channel(const DensityOperator& phi);

/// Embed a row-stochastic matrix as a channel on the matrix algebra.
Channel classical_embed(const StochasticMatrix& s);

} // namespace chanent
