#include <doctest.h>

#include "chanent/choi.hpp"
#include "test_helpers.hpp"

using namespace chanent;
using chanent::testing::random_complex;

namespace {

ComplexMatrix transpose_superop(int n) {
    ComplexMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i * n + j, j * n + i) = 1.0;
    return m;
}

} // namespace

TEST_CASE("identity superoperator acts as the identity") {
    const auto id = Channel::superoperator(2, ComplexMatrix::identity(4));
    SampleRng rng(3);
    const auto x = random_complex(rng, 2);
    CHECK(max_abs_diff(id.apply(x), x) == 0.0);
}

TEST_CASE("classical channel maps e00 to p e00 + q e11") {
    const double p = 0.35, q = 0.6;
    const auto t = classical_embed(StochasticMatrix{{p, 1 - p}, {q, 1 - q}});
    const auto img = t.apply(ComplexMatrix::unit(2, 0, 0));
    ComplexMatrix want(2, 2);
    want(0, 0) = p;
    want(1, 1) = q;
    CHECK(max_abs_diff(img, want) < 1e-15);
}

TEST_CASE("classical channel annihilates off-diagonal input") {
    const auto t = classical_embed(StochasticMatrix{{0.2, 0.8}, {0.9, 0.1}});
    CHECK(t.apply(ComplexMatrix::unit(2, 0, 1)).max_abs() == 0.0);
}

TEST_CASE("state channel returns tr(theta x) times the identity") {
    const DensityOperator phi(ComplexMatrix::diagonal({0.3, 0.7}));
    const auto t = state_channel(phi);
    const auto img = t.apply(ComplexMatrix::unit(2, 0, 0));
    CHECK(max_abs_diff(img, ComplexMatrix::identity(2) * Complex(0.3)) < 1e-15);

    const DensityOperator mixed(ComplexMatrix::diagonal({0.5, 0.5}));
    SampleRng rng(5);
    const auto x = random_complex(rng, 2);
    const auto expect = ComplexMatrix::identity(2) * (x.trace() * Complex(0.5));
    CHECK(max_abs_diff(state_channel(mixed).apply(x), expect) < 1e-14);
}

TEST_CASE("unitality checks") {
    CHECK(check_unital(Channel::superoperator(2, ComplexMatrix::identity(4))));
    // a lone projector is not a unital Kraus family
    CHECK_FALSE(check_unital(Channel::kraus(2, {ComplexMatrix::unit(2, 0, 0)})));

    SampleRng rng(7);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(check_unital(classical_embed(random_stochastic(rng, 3))));
}

TEST_CASE("complete positivity checks") {
    CHECK(check_completely_positive(Channel::superoperator(2, ComplexMatrix::identity(4))));
    const auto transpose = Channel::superoperator(2, transpose_superop(2));
    CHECK(check_unital(transpose));
    CHECK_FALSE(check_completely_positive(transpose));
    // its representative operator has an eigenvalue at -1
    CHECK(representative_operator(transpose).min_eigenvalue ==
          doctest::Approx(-1.0).epsilon(1e-12));

    SampleRng rng(11);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(check_completely_positive(classical_embed(random_stochastic(rng, 2))));
}

TEST_CASE("state channels are unital and completely positive") {
    SampleRng rng(13);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto t = state_channel(random_density(rng, n));
            CHECK(check_unital(t));
            CHECK(check_completely_positive(t));
        }
    }
}

TEST_CASE("pure state channels act by the expectation value") {
    SampleRng rng(17);
    const auto phi = random_pure_state(rng, 2);
    const auto t = state_channel(phi);
    const auto x = random_complex(rng, 2);
    const Complex want = phi.expectation(x);
    const auto img = t.apply(x);
    CHECK(std::abs(img(0, 0) - want) < 1e-14);
    CHECK(std::abs(img(1, 1) - want) < 1e-14);
    CHECK(std::abs(img(0, 1)) == 0.0);
}

TEST_CASE("classical embeddings of deterministic matrices") {
    // identity assignment: fixes the diagonal subalgebra
    const auto t1 = classical_embed(StochasticMatrix{{1.0, 0.0}, {0.0, 1.0}});
    CHECK(max_abs_diff(t1.apply(ComplexMatrix::diagonal({2.0, 5.0})),
                       ComplexMatrix::diagonal({2.0, 5.0})) == 0.0);
    CHECK(t1.apply(ComplexMatrix::unit(2, 1, 0)).max_abs() == 0.0);

    // both states map to state 0
    const auto t2 = classical_embed(StochasticMatrix{{1.0, 0.0}, {1.0, 0.0}});
    const auto img = t2.apply(ComplexMatrix::unit(2, 0, 0));
    CHECK(max_abs_diff(img, ComplexMatrix::identity(2)) == 0.0);
    CHECK(t2.apply(ComplexMatrix::unit(2, 1, 1)).max_abs() == 0.0);
}

TEST_CASE("stochastic validation rejects bad rows") {
    CHECK_THROWS_AS(StochasticMatrix(2, {0.5, 0.6, 0.3, 0.7}), ValidationError);
    CHECK_THROWS_AS(StochasticMatrix(2, {1.2, -0.2, 0.3, 0.7}), ValidationError);
}

TEST_CASE("density operator validation") {
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({0.5, 0.6})), ValidationError);
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({1.5, -0.5})), ValidationError);
    const ComplexMatrix nonherm{{0.5, 0.3}, {0.0, 0.5}};
    CHECK_THROWS_AS(DensityOperator{nonherm}, ValidationError);
}

TEST_CASE("apply rejects dimension mismatches") {
    const auto t = classical_embed(StochasticMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK_THROWS_AS(t.apply(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("all stored forms of one channel agree on the matrix-unit basis") {
    SampleRng rng(19);
    const auto s = random_stochastic(rng, 2);
    const auto direct = classical_embed(s);
    const auto as_superop = Channel::superoperator(2, direct.superoperator_matrix());
    const auto as_kraus =
        Channel::kraus(2, kraus_from_representative(representative_operator(direct)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto u = ComplexMatrix::unit(2, i, j);
            const auto want = direct.apply(u);
            CHECK(max_abs_diff(as_superop.apply(u), want) < 1e-10);
            CHECK(max_abs_diff(as_kraus.apply(u), want) < 1e-10);
        }
}

TEST_CASE("convex combinations preserve unitality and complete positivity") {
    SampleRng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = classical_embed(random_stochastic(rng, 2));
        const auto b = state_channel(random_density(rng, 2));
        const double alpha = rng.uniform();
        auto combo = a.superoperator_matrix();
        combo *= Complex(alpha);
        auto bm = b.superoperator_matrix();
        bm *= Complex(1.0 - alpha);
        combo += bm;
        const auto mix = Channel::superoperator(2, std::move(combo));
        CHECK(check_unital(mix));
        CHECK(check_completely_positive(mix));
    }
}

TEST_CASE("sampled finite quadratic form is PSD for unital CP channels") {
    // sum_ij b_i^* T(a_i^* a_j) b_j >= 0 as an operator, sampled on random
    // collections {a_i}, {b_i}
    SampleRng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = (trial % 2 == 0) ? 2 : 3;
        const auto t = (trial % 4 < 2) ? classical_embed(random_stochastic(rng, n))
                                       : state_channel(random_density(rng, n));
        std::vector<ComplexMatrix> as, bs;
        for (int m = 0; m < 2; ++m) {
            as.push_back(random_complex(rng, n));
            bs.push_back(random_complex(rng, n));
        }
        ComplexMatrix form(n, n);
        for (size_t i = 0; i < as.size(); ++i)
            for (size_t j = 0; j < as.size(); ++j)
                form += bs[i].adjoint() * t.apply(as[i].adjoint() * as[j]) * bs[j];
        CHECK(is_psd(form, 1e-9));
    }
}
