#include <doctest.h>

#include <set>

#include "chanent/choi.hpp"
#include "chanent/decomposition.hpp"
#include "test_helpers.hpp"

using namespace chanent;

namespace {

// Independent check that a witness actually decomposes s.
void check_witness(const EntropyReport& report, const StochasticMatrix& s) {
    const int n = s.dim();
    std::vector<double> recon(static_cast<size_t>(n) * n, 0.0);
    double total = 0.0;
    for (size_t k = 0; k < report.witness.components.size(); ++k) {
        const double w = report.witness.weights[k];
        CHECK(w >= 0.0);
        total += w;
        const auto& f = report.witness.components[k];
        for (int i = 0; i < n; ++i) recon[static_cast<size_t>(i) * n + f.assignment[i]] += w;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(recon[static_cast<size_t>(i) * n + j] == doctest::Approx(s(i, j)).epsilon(1e-10));
}

double grid_minimum(const StochasticMatrix& s, double step) {
    const auto fam = two_by_two_family(s);
    double best = fam.entropy(fam.d_min);
    for (double d = fam.d_min; d < fam.d_max; d += step) best = std::min(best, fam.entropy(d));
    best = std::min(best, fam.entropy(fam.d_max));
    return best;
}

} // namespace

TEST_CASE("deterministic map enumeration counts and contents") {
    CHECK(enumerate_deterministic(1).size() == 1);

    const auto maps2 = enumerate_deterministic(2);
    REQUIRE(maps2.size() == 4);
    CHECK(maps2[0].assignment == std::vector<int>{0, 0}); // everything to state 0
    CHECK(maps2[1].assignment == std::vector<int>{0, 1}); // identity
    CHECK(maps2[2].assignment == std::vector<int>{1, 0}); // swap
    CHECK(maps2[3].assignment == std::vector<int>{1, 1}); // everything to state 1
    for (size_t k = 0; k < maps2.size(); ++k) CHECK(maps2[k].index() == static_cast<int>(k));

    const auto maps3 = enumerate_deterministic(3);
    CHECK(maps3.size() == 27);
    std::set<std::vector<int>> unique;
    for (const auto& f : maps3) unique.insert(f.assignment);
    CHECK(unique.size() == 27);

    CHECK_THROWS_AS(enumerate_deterministic(6), CapacityError);
}

TEST_CASE("deterministic maps convert to 0/1 stochastic matrices") {
    const auto maps = enumerate_deterministic(2);
    const auto swap = maps[2].matrix();
    CHECK(swap(0, 1) == 1.0);
    CHECK(swap(1, 0) == 1.0);
    CHECK(swap.is_deterministic());
}

TEST_CASE("polytope system encodes the marginal constraints") {
    const StochasticMatrix s{{0.6, 0.4}, {0.25, 0.75}};
    const auto sys = decomposition_polytope(s);
    CHECK(sys.num_rows == 4);
    CHECK(sys.maps.size() == 4);
    // column of map f has a 1 in row (i, f(i)) for each i
    for (size_t c = 0; c < sys.maps.size(); ++c)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const double want = (sys.maps[c].assignment[i] == j) ? 1.0 : 0.0;
                CHECK(sys.constraints[static_cast<size_t>(i * 2 + j) * 4 + c] == want);
            }
    CHECK(sys.rhs == std::vector<double>{0.6, 0.4, 0.25, 0.75});
}

TEST_CASE("two by two family: interval and weights") {
    const auto fam = two_by_two_family(StochasticMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(fam.d_min == 0.0);
    CHECK(fam.d_max == 0.5);
    const auto w = fam.weights(0.2);
    CHECK(w[0] == doctest::Approx(0.3)); // all -> 0
    CHECK(w[1] == doctest::Approx(0.2)); // identity
    CHECK(w[2] == doctest::Approx(0.2)); // swap
    CHECK(w[3] == doctest::Approx(0.3)); // all -> 1
}

TEST_CASE("family entropy matches the objective F after the parameter relabel") {
    // at p + q = 1 the family weights are {q-d, p-q+d, d, q-d}, which is the
    // multiset {x, p-x, q-x, x} under x = q - d
    const double p = 0.7, q = 0.3;
    const auto fam = two_by_two_family(StochasticMatrix{{p, 1 - p}, {q, 1 - q}});
    for (double d : {0.0, 0.1, 0.25, 0.3}) {
        if (d < fam.d_min || d > fam.d_max) continue;
        CHECK(fam.entropy(d) == doctest::Approx(mixing_entropy_F(p, q, q - d)).epsilon(1e-12));
    }
}

TEST_CASE("channel entropy of the worked example at p = q = 1/2") {
    const StochasticMatrix s{{0.5, 0.5}, {0.5, 0.5}};
    const auto report = channel_entropy_classical(s);
    CHECK(report.h_channel.nats == doctest::Approx(M_LN2).epsilon(1e-12));
    CHECK(report.d_choi.nats == doctest::Approx(2.0 * M_LN2).epsilon(1e-12));
    CHECK(report.gap == doctest::Approx(M_LN2).epsilon(1e-12));
    // witness: weight 1/2 on each constant map, the lexicographically
    // smallest of the two minimizing supports
    REQUIRE(report.witness.components.size() == 2);
    CHECK(report.witness.components[0].assignment == std::vector<int>{0, 0});
    CHECK(report.witness.components[1].assignment == std::vector<int>{1, 1});
    CHECK(report.witness.weights[0] == doctest::Approx(0.5));
    CHECK(report.witness.weights[1] == doctest::Approx(0.5));
    check_witness(report, s);
}

TEST_CASE("channel entropy matches the closed form along p + q = 1") {
    for (double p : {0.1, 0.25, 0.5, 0.65, 0.9}) {
        const double q = 1.0 - p;
        const StochasticMatrix s{{p, 1 - p}, {q, 1 - q}};
        const auto report = channel_entropy_classical(s);
        const double want = -(p * std::log(p) + q * std::log(q));
        CHECK(report.h_channel.nats == doctest::Approx(want).epsilon(1e-11));
        CHECK(minimize_F_closed_form(p, q).nats == doctest::Approx(want).epsilon(1e-12));
        check_witness(report, s);
    }
}

TEST_CASE("channel entropy of deterministic matrices vanishes with a point-mass witness") {
    const StochasticMatrix s{{0.0, 1.0}, {1.0, 0.0}};
    const auto report = channel_entropy_classical(s);
    CHECK(report.h_channel.nats == 0.0);
    CHECK(report.d_choi.nats == 0.0);
    CHECK(report.gap == 0.0);
    REQUIRE(report.witness.components.size() == 1);
    CHECK(report.witness.components[0].assignment == std::vector<int>{1, 0});
    CHECK(report.witness.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generic 2x2 channel against the dense grid oracle") {
    const StochasticMatrix s{{0.6, 0.4}, {0.7, 0.3}};
    const auto report = channel_entropy_classical(s);
    const double grid = grid_minimum(s, 1e-5);
    CHECK(report.h_channel.nats == doctest::Approx(grid).epsilon(1e-9));
    check_witness(report, s);
}

TEST_CASE("vertex search agrees with the family endpoints on random 2x2 channels") {
    SampleRng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_stochastic(rng, 2);
        const auto report = channel_entropy_classical(s);
        const auto fam = two_by_two_family(s);
        const double closed = std::min(fam.entropy(fam.d_min), fam.entropy(fam.d_max));
        CHECK(report.h_channel.nats == doctest::Approx(closed).epsilon(1e-10));
        check_witness(report, s);
    }
}

TEST_CASE("closed-form minimization: values and concavity of the interior point") {
    CHECK(minimize_F_closed_form(0.5, 0.5).nats == doctest::Approx(M_LN2).epsilon(1e-12));
    CHECK(minimize_F_closed_form(0.9, 0.1).nats ==
          doctest::Approx(0.3250829733914482).epsilon(1e-12));
    // arguments may come in either order
    CHECK(minimize_F_closed_form(0.1, 0.9).nats ==
          doctest::Approx(0.3250829733914482).epsilon(1e-12));

    // endpoint comparison at p = 0.7: F(0) < F(q), and the interior critical
    // point x = pq is a maximum
    const double p = 0.7, q = 0.3;
    const double f0 = mixing_entropy_F(p, q, 0.0);
    const double fq = mixing_entropy_F(p, q, q);
    CHECK(f0 == doctest::Approx(0.6108643020548935).epsilon(1e-12));
    CHECK(fq == doctest::Approx(1.0888999753452238).epsilon(1e-12));
    CHECK(f0 < fq);
    const double fstar = mixing_entropy_F(p, q, p * q);
    CHECK(fstar >= f0);
    CHECK(fstar >= fq);
}

TEST_CASE("closed form rejects p + q != 1 and out-of-range arguments") {
    CHECK_THROWS_AS(minimize_F_closed_form(0.6, 0.6), ContractViolation);
    CHECK_THROWS_AS(minimize_F_closed_form(1.0, 0.0), ContractViolation);
}

TEST_CASE("state channel entropy upper bound equals the Ohya entropy") {
    SampleRng rng(83);
    CHECK(state_channel_entropy_upper(random_pure_state(rng, 3)).nats < 1e-10);
    const DensityOperator half(ComplexMatrix::diagonal({0.5, 0.5}));
    CHECK(state_channel_entropy_upper(half).nats == doctest::Approx(M_LN2).epsilon(1e-12));
    const DensityOperator skew(ComplexMatrix::diagonal({0.2, 0.8}));
    CHECK(state_channel_entropy_upper(skew).nats ==
          doctest::Approx(0.5004024235381879).epsilon(1e-12));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = (trial % 3) + 2;
        const auto phi = random_density(rng, n);
        CHECK(std::fabs(state_channel_entropy_upper(phi).nats - ohya_entropy(phi).nats) < 1e-12);
    }
}

TEST_CASE("inequality report on the example and on deterministic input") {
    const auto rep = verify_inequality(StochasticMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(rep.gap == doctest::Approx(M_LN2).epsilon(1e-12));
    const auto det = verify_inequality(StochasticMatrix{{1.0, 0.0}, {0.0, 1.0}});
    CHECK(det.h_channel.nats == 0.0);
    CHECK(det.gap == 0.0);
}

TEST_CASE("inequality holds on random channels at n = 2 and n = 3") {
    SampleRng rng(89);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = random_stochastic(rng, trial % 2 == 0 ? 2 : 3);
        const auto rep = verify_inequality(s);
        CHECK(rep.gap >= -1e-9);
        check_witness(rep, s);
        // the product coupling is feasible with entropy exactly d_choi, so the
        // vertex minimum can never exceed it
        CHECK(rep.h_channel.nats <= rep.d_choi.nats + 1e-9);
        // and any coupling majorizes each marginal
        double max_row = 0.0;
        for (int i = 0; i < s.dim(); ++i) {
            double h = 0.0;
            for (int j = 0; j < s.dim(); ++j)
                if (s(i, j) > 1e-12) h -= s(i, j) * std::log(s(i, j));
            max_row = std::max(max_row, h);
        }
        CHECK(rep.h_channel.nats >= max_row - 1e-9);
    }
}

TEST_CASE("H vanishes exactly for 0/1 matrices and only for them") {
    SampleRng rng(97);
    const auto maps = enumerate_deterministic(3);
    for (const auto& f : maps) {
        const auto rep = channel_entropy_classical(f.matrix());
        CHECK(rep.h_channel.nats == 0.0);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_stochastic(rng, 2);
        if (s.is_deterministic()) continue;
        CHECK(channel_entropy_classical(s).h_channel.nats > 1e-6);
    }
}

TEST_CASE("extremality implies zero channel entropy on classical inputs") {
    SampleRng rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_stochastic(rng, 2);
        if (is_extremal_choi(classical_embed(s)))
            CHECK(channel_entropy_classical(s).h_channel.nats < 1e-10);
    }
    for (const auto& f : enumerate_deterministic(2))
        if (is_extremal_choi(classical_embed(f.matrix())))
            CHECK(channel_entropy_classical(f.matrix()).h_channel.nats == 0.0);
}

TEST_CASE("n=3 channel with two deterministic rows reduces to the free row") {
    const StochasticMatrix s{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.3, 0.3, 0.4}};
    const auto rep = channel_entropy_classical(s);
    const double want = -(0.3 * std::log(0.3) + 0.3 * std::log(0.3) + 0.4 * std::log(0.4));
    CHECK(rep.h_channel.nats == doctest::Approx(want).epsilon(1e-11));
    check_witness(rep, s);
}

TEST_CASE("n=3 channel with a 2x2 block and a fixed point matches the n=2 answer") {
    const double p = 0.62, q = 0.17;
    const StochasticMatrix s2{{p, 1 - p}, {q, 1 - q}};
    const StochasticMatrix s3{{p, 1 - p, 0.0}, {q, 1 - q, 0.0}, {0.0, 0.0, 1.0}};
    const double h2 = channel_entropy_classical(s2).h_channel.nats;
    const double h3 = channel_entropy_classical(s3).h_channel.nats;
    CHECK(h3 == doctest::Approx(h2).epsilon(1e-10));
}

TEST_CASE("channel entropy is invariant under relabeling the states") {
    SampleRng rng(101);
    const int perm[3] = {2, 0, 1};
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = random_stochastic(rng, 3);
        std::vector<double> rel(9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                rel[static_cast<size_t>(perm[i]) * 3 + perm[j]] = s(i, j);
        const StochasticMatrix sp(3, std::move(rel));
        CHECK(channel_entropy_classical(sp).h_channel.nats ==
              doctest::Approx(channel_entropy_classical(s).h_channel.nats).epsilon(1e-10));
    }
}

TEST_CASE("capacity limit on the exact solver") {
    std::vector<double> flat(16, 0.25);
    CHECK_THROWS_AS(channel_entropy_classical(StochasticMatrix(4, std::move(flat))),
                    CapacityError);
}
