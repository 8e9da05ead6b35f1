#include "chanent/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace chanent {

namespace {

double weight_entropy(const double* lam, int count) {
    double h = 0.0;
    for (int i = 0; i < count; ++i)
        if (lam[i] >= 1e-12) h -= lam[i] * std::log(lam[i]);
    return h;
}

double xlogx_term(double v) {
    return v >= 1e-15 ? -v * std::log(v) : 0.0;
}

} // namespace

int DeterministicMap::index() const {
    int idx = 0;
    for (int i = 0; i < dim; ++i) idx = idx * dim + assignment[i];
    return idx;
}

StochasticMatrix DeterministicMap::matrix() const {
    std::vector<double> entries(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) entries[static_cast<size_t>(i) * dim + assignment[i]] = 1.0;
    return StochasticMatrix(dim, std::move(entries));
}

std::vector<DeterministicMap> enumerate_deterministic(int n) {
    if (n <= 0) throw ValidationError("dimension must be positive");
    if (n > 5) throw CapacityError("deterministic-map enumeration is limited to n <= 5");
    int total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    std::vector<DeterministicMap> maps;
    maps.reserve(total);
    for (int idx = 0; idx < total; ++idx) {
        DeterministicMap f;
        f.dim = n;
        f.assignment.resize(n);
        int rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            f.assignment[i] = rem % n;
            rem /= n;
        }
        maps.push_back(std::move(f));
    }
    return maps;
}

PolytopeSystem decomposition_polytope(const StochasticMatrix& s) {
    const int n = s.dim();
    if (n > 4) throw CapacityError("decomposition polytope is limited to n <= 4");
    PolytopeSystem sys;
    sys.n = n;
    sys.maps = enumerate_deterministic(n);
    sys.num_rows = n * n;
    const int nv = static_cast<int>(sys.maps.size());
    sys.constraints.assign(static_cast<size_t>(sys.num_rows) * nv, 0.0);
    for (int c = 0; c < nv; ++c)
        for (int i = 0; i < n; ++i) {
            const int row = i * n + sys.maps[c].assignment[i];
            sys.constraints[static_cast<size_t>(row) * nv + c] = 1.0;
        }
    sys.rhs.resize(sys.num_rows);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys.rhs[static_cast<size_t>(i) * n + j] = s(i, j);
    return sys;
}

TwoByTwoFamily two_by_two_family(const StochasticMatrix& s) {
    if (s.dim() != 2) throw DimensionError("two_by_two_family requires a 2x2 matrix");
    TwoByTwoFamily fam;
    fam.p = s(0, 0);
    fam.q = s(1, 0);
    fam.d_min = std::max(0.0, fam.q - fam.p);
    fam.d_max = std::min(fam.q, 1.0 - fam.p);
    return fam;
}

double TwoByTwoFamily::entropy(double d) const {
    const auto w = weights(d);
    return weight_entropy(w.data(), 4);
}

namespace {

// --- exact vertex enumeration of the decomposition polytope -----------------
//
// Basic feasible solutions of  A lambda = b, lambda >= 0  have support on a
// linearly independent column set of size rank(A). The search walks column
// subsets in increasing index order, keeping an incremental forward
// elimination so that each node costs O(rank * depth) and each full-depth
// leaf a back-substitution.

constexpr int kMaxVars = 32;  // >= 3^3
constexpr int kMaxRows = 10;  // >= 3*3
constexpr int kMaxRank = 9;

struct VertexSearch {
    int nv = 0;
    int rank = 0;
    double reduced[kMaxRows][kMaxVars]; // independent rows after row reduction
    double rhs0[kMaxRows];

    // DFS path state
    int pivot_row[kMaxRank];
    int chosen[kMaxRank];
    bool row_used[kMaxRows];
    double ucol[kMaxRank][kMaxRows];       // normalized reduced columns
    double mult[kMaxRank][kMaxRank];       // elimination multipliers against earlier pivots
    double divisor[kMaxRank];              // pre-normalization pivot values
    double rhs_at[kMaxRank + 1][kMaxRows]; // rhs after k eliminations
    double pivot_of_rhs[kMaxRank];         // rhs component removed at each depth

    // best vertex so far
    bool found = false;
    double best_entropy = 0.0;
    std::vector<int> best_support;       // sorted column indices with weight > 1e-12
    std::vector<double> best_weights;    // matching weights

    void row_reduce(const std::vector<double>& a, const std::vector<double>& b, int rows) {
        double m[kMaxRows][kMaxVars + 1];
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < nv; ++j) m[i][j] = a[static_cast<size_t>(i) * nv + j];
            m[i][nv] = b[i];
        }
        rank = 0;
        for (int col = 0; col < nv && rank < rows; ++col) {
            int piv = -1;
            double best = 1e-10;
            for (int r = rank; r < rows; ++r)
                if (std::fabs(m[r][col]) > best) {
                    best = std::fabs(m[r][col]);
                    piv = r;
                }
            if (piv < 0) continue;
            for (int j = 0; j <= nv; ++j) std::swap(m[rank][j], m[piv][j]);
            const double inv = 1.0 / m[rank][col];
            for (int j = col; j <= nv; ++j) m[rank][j] *= inv;
            for (int r = 0; r < rows; ++r) {
                if (r == rank) continue;
                const double f = m[r][col];
                if (f == 0.0) continue;
                for (int j = col; j <= nv; ++j) m[r][j] -= f * m[rank][j];
            }
            ++rank;
        }
        // consistency: dependent rows must have vanishing rhs
        for (int r = rank; r < rows; ++r)
            if (std::fabs(m[r][nv]) > 1e-9)
                throw Error("decomposition system is infeasible");
        for (int r = 0; r < rank; ++r) {
            for (int j = 0; j < nv; ++j) reduced[r][j] = m[r][j];
            rhs0[r] = m[r][nv];
        }
    }

    void consider_leaf() {
        double lam[kMaxRank];
        for (int t = rank - 1; t >= 0; --t) {
            double v = pivot_of_rhs[t];
            for (int s = t + 1; s < rank; ++s) v -= lam[s] * mult[s][t];
            lam[t] = v / divisor[t];
        }
        for (int t = 0; t < rank; ++t)
            if (lam[t] < -1e-10) return;

        const double h = weight_entropy(lam, rank);
        if (found && h > best_entropy + 1e-12) return;

        std::vector<int> support;
        std::vector<double> weights;
        for (int t = 0; t < rank; ++t)
            if (lam[t] > 1e-12) {
                support.push_back(chosen[t]);
                weights.push_back(lam[t]);
            }
        // chosen[] is increasing by construction, so support is sorted
        if (found && h >= best_entropy - 1e-12) {
            // tie: keep the lexicographically smaller support
            if (support >= best_support) return;
            best_entropy = std::min(best_entropy, h);
        } else {
            best_entropy = h;
        }
        found = true;
        best_support = std::move(support);
        best_weights = std::move(weights);
    }

    void dfs(int depth, int start) {
        if (depth == rank) {
            consider_leaf();
            return;
        }
        const int remaining = rank - depth;
        for (int c = start; c <= nv - remaining; ++c) {
            double w[kMaxRows];
            for (int i = 0; i < rank; ++i) w[i] = reduced[i][c];
            for (int t = 0; t < depth; ++t) {
                const double f = w[pivot_row[t]];
                mult[depth][t] = f;
                if (f != 0.0)
                    for (int i = 0; i < rank; ++i) w[i] -= f * ucol[t][i];
            }
            int p = -1;
            double best = 1e-9;
            for (int i = 0; i < rank; ++i)
                if (!row_used[i] && std::fabs(w[i]) > best) {
                    best = std::fabs(w[i]);
                    p = i;
                }
            if (p < 0) continue; // column dependent on the chosen ones
            const double d = w[p];
            const double inv = 1.0 / d;
            for (int i = 0; i < rank; ++i) ucol[depth][i] = w[i] * inv;
            const double m = rhs_at[depth][p];
            for (int i = 0; i < rank; ++i) rhs_at[depth + 1][i] = rhs_at[depth][i] - m * ucol[depth][i];
            rhs_at[depth + 1][p] = 0.0;

            pivot_row[depth] = p;
            chosen[depth] = c;
            divisor[depth] = d;
            pivot_of_rhs[depth] = m;
            row_used[p] = true;
            dfs(depth + 1, c + 1);
            row_used[p] = false;
        }
    }

    void run(const PolytopeSystem& sys) {
        nv = static_cast<int>(sys.maps.size());
        if (nv > kMaxVars || sys.num_rows > kMaxRows)
            throw CapacityError("vertex enumeration is limited to n <= 3");
        row_reduce(sys.constraints, sys.rhs, sys.num_rows);
        for (int i = 0; i < rank; ++i) rhs_at[0][i] = rhs0[i];
        std::fill(row_used, row_used + kMaxRows, false);
        dfs(0, 0);
        if (!found) throw Error("decomposition polytope has no vertex");
    }
};

} // namespace

EntropyReport channel_entropy_classical(const StochasticMatrix& s) {
    const int n = s.dim();
    if (n > 3) throw CapacityError("exact channel entropy is limited to n <= 3");

    const PolytopeSystem sys = decomposition_polytope(s);
    VertexSearch search;
    search.run(sys);

    if (n == 2) {
        // Independent closed-form route: the solution set is the segment
        // d in [d_min, d_max]; concavity puts the minimum at an endpoint.
        const TwoByTwoFamily fam = two_by_two_family(s);
        const double closed = std::min(fam.entropy(fam.d_min), fam.entropy(fam.d_max));
        if (std::fabs(closed - search.best_entropy) > 1e-10)
            throw ContractViolation("vertex search disagrees with the 2x2 closed form");
    }

    EntropyReport report;
    report.h_channel = {search.best_entropy};
    report.d_choi = choi_entropy(classical_embed(s));
    report.gap = report.d_choi.nats - report.h_channel.nats;
    for (size_t k = 0; k < search.best_support.size(); ++k) {
        report.witness.components.push_back(sys.maps[search.best_support[k]]);
        report.witness.weights.push_back(std::max(0.0, search.best_weights[k]));
    }
    return report;
}

double mixing_entropy_F(double p, double q, double x) {
    return xlogx_term(p - x) + xlogx_term(q - x) + 2.0 * xlogx_term(x);
}

EntropyValue minimize_F_closed_form(double p, double q) {
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
        throw ContractViolation("minimize_F_closed_form requires p, q in (0, 1)");
    if (std::fabs(p + q - 1.0) > 1e-12)
        throw ContractViolation("minimize_F_closed_form requires p + q = 1");
    if (p < q) std::swap(p, q);
    const double at_zero = mixing_entropy_F(p, q, 0.0);
    const double at_q = mixing_entropy_F(p, q, q);
    return {std::min(at_zero, at_q)};
}

EntropyValue state_channel_entropy_upper(const DensityOperator& phi) {
    // spectral decomposition of theta gives T_phi as a mixture of extremal
    // state channels with the eigenvalues as weights
    const Spectrum spec = hermitian_eig(phi.matrix());
    double h = 0.0;
    for (double lam : spec.eigenvalues) {
        if (lam < -1e-9)
            throw ContractViolation("state has a negative eigenvalue");
        if (lam >= 1e-12) h -= lam * std::log(lam);
    }
    return {h};
}

EntropyReport verify_inequality(const StochasticMatrix& s) {
    EntropyReport report = channel_entropy_classical(s);
    if (report.gap < -1e-9)
        throw ContractViolation("entropy inequality violated: d(rho_T) < H(T)");
    return report;
}

} // namespace chanent
