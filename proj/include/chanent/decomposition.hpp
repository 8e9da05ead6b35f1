#pragma once

#include <array>
#include <vector>

#include "chanent/channel.hpp"
#include "chanent/entropy.hpp"

namespace chanent {

/// A deterministic classical map on {0..n-1}: the 0/1 row-stochastic matrices,
/// i.e. the extreme points of the classical channel polytope.
struct DeterministicMap {
    int dim = 0;
    std::vector<int> assignment; // assignment[i] = image of state i

    /// Position in the base-n enumeration order.
    int index() const;
    StochasticMatrix matrix() const;
};

/// All n^n deterministic maps in base-n order (assignment of state 0 is the
/// most significant digit). Capacity-limited to n <= 5.
std::vector<DeterministicMap> enumerate_deterministic(int n);

/// Linear system describing the decompositions of a stochastic matrix into
/// deterministic maps: for every entry (i, j),
///     sum over { f : f(i) = j } of lambda_f  =  s(i, j),
/// with lambda >= 0. Unit total weight is implied by the row sums.
struct PolytopeSystem {
    int n = 0;
    std::vector<DeterministicMap> maps; // column order
    int num_rows = 0;                   // n*n
    std::vector<double> constraints;    // row-major num_rows x maps.size()
    std::vector<double> rhs;            // s flattened row-major
};

PolytopeSystem decomposition_polytope(const StochasticMatrix& s);

/// The one-parameter solution family at n = 2, with free parameter
/// d = weight of the swap map. Weight order matches the map enumeration:
/// (all->0, identity, swap, all->1).
struct TwoByTwoFamily {
    double p = 0.0, q = 0.0; // s(0,0) and s(1,0)
    double d_min = 0.0, d_max = 0.0;

    std::array<double, 4> weights(double d) const {
        return {q - d, p - q + d, d, 1.0 - p - d};
    }
    double entropy(double d) const;
};

TwoByTwoFamily two_by_two_family(const StochasticMatrix& s);

/// Weights over deterministic maps realizing a stochastic matrix.
struct ExtremalDecomposition {
    std::vector<DeterministicMap> components;
    std::vector<double> weights;
};

struct EntropyReport {
    EntropyValue h_channel; // minimal mixing entropy H(T)
    EntropyValue d_choi;    // entropy of the representative operator
    double gap = 0.0;       // d_choi - h_channel
    ExtremalDecomposition witness;
};

/// Exact H(T) for a classical channel: the minimum of -sum lambda ln lambda
/// over the decomposition polytope. The objective is concave, so the minimum
/// sits at a vertex; the solver enumerates basic feasible solutions and keeps
/// the minimizing one (ties broken toward the lexicographically smallest
/// support). Capacity-limited to n <= 3.
EntropyReport channel_entropy_classical(const StochasticMatrix& s);

/// The mixing-entropy objective along the n = 2 family at p + q = 1:
/// F(x) = -(p-x)ln(p-x) - (q-x)ln(q-x) - 2x ln x, with 0 ln 0 = 0.
double mixing_entropy_F(double p, double q, double x);

/// Closed form for the n = 2 case at p + q = 1: F is concave on [0, q]
/// (interior critical point at x = pq), so the minimum is the smaller
/// endpoint value, which equals -p ln p - q ln q.
EntropyValue minimize_F_closed_form(double p, double q);

/// Upper bound on H(T_phi) from the spectral decomposition of the state:
/// equals the entropy of the eigenvalue weights, i.e. ohya_entropy(phi).
EntropyValue state_channel_entropy_upper(const DensityOperator& phi);

/// Full report for a classical channel; throws ContractViolation if the
/// computed gap falls below -1e-9 (which would indicate a solver defect).
EntropyReport verify_inequality(const StochasticMatrix& s);

} // namespace chanent
