#include <doctest.h>

#include <cmath>

#include "adiachain/adiabatic_continuous.hpp"
#include "adiachain/expm_reference.hpp"
#include "adiachain/mixing.hpp"
#include "adiachain/random_chains.hpp"

using namespace adiachain;

namespace {

Generator two_state_rate_one() {
    Eigen::MatrixXd q(2, 2);
    q << -1, 1, 1, -1;
    return Generator(q);
}

// Closed form for the symmetric 2-state generator at rate 1:
// P(t) = [[(1 + e^{-2t})/2, (1 - e^{-2t})/2], [...]].
Eigen::MatrixXd two_state_closed_form(double t) {
    const double decay = std::exp(-2.0 * t);
    Eigen::MatrixXd p(2, 2);
    p << (1 + decay) / 2, (1 - decay) / 2, (1 - decay) / 2, (1 + decay) / 2;
    return p;
}

}  // namespace

// The reference exponential is the oracle for everything below, so it is
// checked against the closed form first.
TEST_CASE("reference matrix exponential matches the 2-state closed form") {
    for (double t : {0.0, 0.05, 0.3, 1.0, 5.0, 40.0}) {
        const Eigen::MatrixXd e = expm_reference(two_state_rate_one().rates() * t);
        CHECK((e - two_state_closed_form(t)).cwiseAbs().maxCoeff() <= 1e-13);
    }
    // And on a nilpotent matrix, where the series is exact and finite.
    Eigen::MatrixXd nil(2, 2);
    nil << 0, 3, 0, 0;
    Eigen::MatrixXd expected(2, 2);
    expected << 1, 3, 0, 1;
    CHECK((expm_reference(nil) - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("generator validation") {
    Eigen::MatrixXd bad(2, 2);
    bad << -1.0, 0.9, 1.0, -1.0;
    CHECK_THROWS_AS(Generator{bad}, InvalidInputError);
    bad << -1.0, 1.0, -0.5, 0.5;
    CHECK_THROWS_AS(Generator{bad}, InvalidInputError);
    CHECK(two_state_rate_one().max_departure_rate() == 1.0);
    CHECK(Generator(Eigen::MatrixXd::Zero(3, 3)).max_departure_rate() == 0.0);
}

TEST_CASE("uniformization of the 2-state generator") {
    const UniformizedChain u1 = uniformize(two_state_rate_one(), 1.0);
    Eigen::MatrixXd swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK((u1.jump_chain.entries() - swap).cwiseAbs().maxCoeff() == 0.0);

    const UniformizedChain u2 = uniformize(two_state_rate_one(), 2.0);
    CHECK((u2.jump_chain.entries() - Eigen::MatrixXd::Constant(2, 2, 0.5))
              .cwiseAbs()
              .maxCoeff() <= 1e-15);

    const UniformizedChain u3 = uniformize(Generator(Eigen::MatrixXd::Zero(2, 2)), 1.0);
    CHECK((u3.jump_chain.entries() - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() ==
          0.0);

    CHECK_THROWS_WITH_AS(uniformize(two_state_rate_one(), 0.5), doctest::Contains("row"),
                         InvalidInputError);
}

TEST_CASE("uniformization series against the closed form and the oracle") {
    const Generator q = two_state_rate_one();
    CHECK((transition_matrix(q, 0.0).entries() - Eigen::MatrixXd::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    const double t = std::log(2.0) / 2.0;
    Eigen::MatrixXd expected(2, 2);
    expected << 0.75, 0.25, 0.25, 0.75;
    CHECK((transition_matrix(q, t).entries() - expected).cwiseAbs().maxCoeff() <= 1e-12);

    SeededRng seeds(81);
    for (int rep = 0; rep < 10; ++rep) {
        const Eigen::Index n = 2 + rep % 4;
        const Generator g = random_generator(n, seeds.bits());
        for (double s : {0.1, 1.0, 10.0}) {
            const Eigen::MatrixXd u = transition_matrix(g, s).entries();
            const Eigen::MatrixXd e = expm_reference(g.rates() * s);
            CHECK((u - e).cwiseAbs().maxCoeff() <= 1e-8);
        }
    }
    CHECK_THROWS_AS(transition_matrix(q, -0.1), InvalidInputError);
}

TEST_CASE("semigroup property and lambda invariance") {
    SeededRng seeds(82);
    for (int rep = 0; rep < 10; ++rep) {
        const Generator g = random_generator(2 + rep % 4, seeds.bits());
        const Eigen::MatrixXd whole = transition_matrix(g, 1.0).entries();
        const Eigen::MatrixXd split =
            transition_matrix(g, 0.4).entries() * transition_matrix(g, 0.6).entries();
        CHECK((whole - split).cwiseAbs().maxCoeff() <= 3e-12);

        const double dep = g.max_departure_rate();
        const Eigen::MatrixXd alt = transition_matrix(g, 1.0, 2.0 * dep + 1.0).entries();
        CHECK((whole - alt).cwiseAbs().maxCoeff() <= 2e-12);
    }
}

TEST_CASE("long horizons split without losing row mass") {
    const Generator g = random_generator(3, 83);
    // lambda * t far beyond the series split threshold.
    const double t = 400.0 / g.max_departure_rate();
    const Eigen::MatrixXd p = transition_matrix(g, t).entries();
    CHECK((p.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-11);
    const Eigen::VectorXd pi = generator_stationary(g).weights();
    for (Eigen::Index i = 0; i < 3; ++i) {
        CHECK(0.5 * (p.row(i).transpose() - pi).lpNorm<1>() <= 1e-9);
    }
}

TEST_CASE("generator interpolation") {
    Eigen::MatrixXd q2(2, 2);
    q2 << -3, 3, 3, -3;
    const Generator a = two_state_rate_one();
    const Generator b(q2);
    CHECK((interpolate_generator(a, b, 0.0).rates() - a.rates()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((interpolate_generator(a, b, 1.0).rates() - b.rates()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXd mid(2, 2);
    mid << -2, 2, 2, -2;
    CHECK((interpolate_generator(a, b, 0.5).rates() - mid).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK_THROWS_AS(interpolate_generator(a, b, 1.2), InvalidInputError);

    // Departure rates along the path never exceed the endpoint maximum.
    SeededRng seeds(84);
    for (int rep = 0; rep < 5; ++rep) {
        const Generator ga = random_generator(4, seeds.bits());
        const Generator gb = random_generator(4, seeds.bits());
        const double cap = std::max(ga.max_departure_rate(), gb.max_departure_rate());
        for (int k = 0; k <= 10; ++k) {
            const double s = k / 10.0;
            CHECK(interpolate_generator(ga, gb, s).max_departure_rate() <= cap + 1e-12);
        }
    }
}

TEST_CASE("inhomogeneous evolution reduces to the homogeneous case") {
    const Generator q = two_state_rate_one();
    const ProbabilityDistribution start = ProbabilityDistribution::point_mass(2, 0);
    for (double t : {0.4, 1.3}) {
        const ProbabilityDistribution evolved = evolve_inhomogeneous(start, q, q, t);
        const Eigen::VectorXd direct =
            transition_matrix(q, t).entries().row(0).transpose();
        CHECK((evolved.weights() - direct).cwiseAbs().maxCoeff() <= 1e-10);
    }
    const ProbabilityDistribution frozen = evolve_inhomogeneous(start, q, q, 0.0);
    CHECK((frozen.weights() - start.weights()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("inhomogeneous evolution is second order in the substep size") {
    SeededRng seeds(85);
    const Generator qa = random_generator(3, seeds.bits());
    const Generator qb = random_generator(3, seeds.bits());
    const ProbabilityDistribution start = ProbabilityDistribution::point_mass(3, 1);
    const double total = 1.5;
    const Eigen::VectorXd reference =
        evolve_inhomogeneous(start, qa, qb, total, 1 << 14).weights();
    const double err64 =
        (evolve_inhomogeneous(start, qa, qb, total, 64).weights() - reference)
            .cwiseAbs()
            .maxCoeff();
    const double err128 =
        (evolve_inhomogeneous(start, qa, qb, total, 128).weights() - reference)
            .cwiseAbs()
            .maxCoeff();
    REQUIRE(err64 > 1e-13);  // above the noise floor, so the ratio is meaningful
    CHECK(err64 / err128 >= 3.0);

    // A very fine reference run doubles as the self-convergence oracle.
    const double err4096 =
        (evolve_inhomogeneous(start, qa, qb, total, 4096).weights() - reference)
            .cwiseAbs()
            .maxCoeff();
    CHECK(err4096 <= 1e-8);
}

TEST_CASE("inhomogeneous evolution preserves distributions") {
    SeededRng seeds(86);
    for (int rep = 0; rep < 5; ++rep) {
        const Eigen::Index n = 2 + rep % 4;
        const Generator qa = random_generator(n, seeds.bits());
        const Generator qb = random_generator(n, seeds.bits());
        SeededRng rng(seeds.bits());
        const ProbabilityDistribution nu = random_distribution(n, rng);
        const ProbabilityDistribution out = evolve_inhomogeneous(nu, qa, qb, 2.0);
        CHECK(out.min_weight() >= 0.0);
        CHECK(std::abs(out.weights().sum() - 1.0) <= 1e-10);
    }
}

TEST_CASE("continuous adiabatic time reduces to the mixing time for equal endpoints") {
    const Generator q = two_state_rate_one();
    const double grid = 0.02;
    const ContinuousAdiabaticReport rep =
        adiabatic_time_continuous(q, q, 0.25, 3.0, grid);
    const double t_mix = mixing_time_continuous(q, 0.25, 3.0, grid);
    CHECK(rep.measured_time == doctest::Approx(t_mix).epsilon(1e-12));

    // Large eps is already satisfied at the first grid point.
    const ContinuousAdiabaticReport easy = adiabatic_time_continuous(q, q, 0.6, 3.0, grid);
    CHECK(easy.measured_time == doctest::Approx(grid).epsilon(1e-12));
}

TEST_CASE("horizon bound for the 2-state worked example") {
    const Generator q = two_state_rate_one();
    const ContinuousHorizonBound bound = continuous_horizon_bound(q, q, 0.25, {5.0, 1e-4});
    CHECK(std::abs(bound.t_mix_half - std::log(2.0)) <= 2e-4);
    CHECK(std::abs(bound.lambda - 1.180337) <= 1e-3);
    CHECK(std::abs(bound.t_bound - 2.2684) <= 2e-3);
}

TEST_CASE("horizon bound scales inversely with the rate") {
    // Scaling a generator by c scales lambda by c and the mixing time by
    // 1/c, so the bound scales like 1/c once the departure term dominates.
    Eigen::MatrixXd base(3, 3);
    base << -2.0, 1.5, 0.5, 1.0, -2.5, 1.5, 1.0, 1.0, -2.0;
    const Generator q1(base);
    const ContinuousHorizonBound b1 = continuous_horizon_bound(q1, q1, 0.25);
    double prev_t_mix = b1.t_mix_half;
    for (double c : {2.0, 4.0}) {
        const Generator qc(c * base);
        const ContinuousHorizonBound bc = continuous_horizon_bound(qc, qc, 0.25);
        CHECK(bc.t_mix_half < prev_t_mix);
        prev_t_mix = bc.t_mix_half;
        CHECK(std::abs(bc.lambda - c * b1.lambda) <= 0.05 * c * b1.lambda);
        const double ratio = bc.t_bound * c / b1.t_bound;
        CHECK(ratio >= 0.8);
        CHECK(ratio <= 1.25);
    }
}

TEST_CASE("continuous adiabatic scan matches an independent row composition") {
    // Oracle: evolve each point mass with the public integrator and take the
    // worst distance, independently of the scan's matrix-product path.
    Eigen::MatrixXd qa(2, 2), qb(2, 2);
    qa << -0.4, 0.4, 1.1, -1.1;
    qb << -2.0, 2.0, 0.7, -0.7;
    const Generator q_init(qa), q_final(qb);
    const Eigen::VectorXd pi_f = generator_stationary(q_final).weights();
    const double grid = 0.1, t_cap = 6.0, eps = 0.25;
    double expected = -1.0;
    for (double t = grid; t <= t_cap + 1e-9; t += grid) {
        double worst = 0.0;
        for (int x = 0; x < 2; ++x) {
            const Eigen::VectorXd row =
                evolve_inhomogeneous(ProbabilityDistribution::point_mass(2, x), q_init,
                                     q_final, t)
                    .weights();
            worst = std::max(worst, 0.5 * (row - pi_f).lpNorm<1>());
        }
        if (worst <= eps) {
            expected = t;
            break;
        }
    }
    REQUIRE(expected > 0.0);
    const ContinuousAdiabaticReport rep =
        adiabatic_time_continuous(q_init, q_final, eps, t_cap, grid);
    CHECK(rep.measured_time == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("measured continuous adiabatic time respects the bound") {
    SeededRng seeds(87);
    for (int rep = 0; rep < 3; ++rep) {
        const Generator qa = random_generator(3, seeds.bits());
        const Generator qb = random_generator(3, seeds.bits());
        const ContinuousAdiabaticReport rep_full = continuous_experiment(qa, qb, 0.25);
        CHECK(rep_full.measured_time <= rep_full.theoretical_bound * (1.0 + 1e-12));
        CHECK(rep_full.error_curve.back().second <= 0.25);
    }
}
