#include <doctest.h>

#include <cmath>

#include "adiachain/glauber_ising.hpp"
#include "adiachain/mixing.hpp"
#include "adiachain/random_chains.hpp"
#include "adiachain/spectral.hpp"

using namespace adiachain;

namespace {

IsingModel ferromagnet(int n, double beta) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        j(i, i + 1) = 1.0;
        j(i + 1, i) = 1.0;
    }
    return IsingModel(std::move(j), Eigen::VectorXd::Zero(n), beta);
}

IsingModel single_spin(double h, double beta) {
    return IsingModel(Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Constant(1, h), beta);
}

}  // namespace

TEST_CASE("spin encoding round-trips") {
    for (std::uint32_t x = 0; x < 8; ++x) {
        const SpinConfiguration sigma = SpinConfiguration::from_index(3, x);
        CHECK(sigma.to_index() == x);
        for (int i = 0; i < 3; ++i) {
            CHECK(sigma.spins[i] == ((x >> i & 1) ? 1 : -1));
        }
    }
    CHECK_THROWS_AS(SpinConfiguration::from_index(2, 4), InvalidInputError);
}

TEST_CASE("ising energies") {
    const IsingModel free2(Eigen::MatrixXd::Zero(2, 2), Eigen::VectorXd::Zero(2), 1.0);
    for (std::uint32_t x = 0; x < 4; ++x) {
        CHECK(ising_energy(free2, SpinConfiguration::from_index(2, x)) == 0.0);
    }

    const IsingModel pair = ferromagnet(2, 1.0);
    CHECK(ising_energy(pair, SpinConfiguration::from_index(2, 0b11)) == -1.0);
    CHECK(ising_energy(pair, SpinConfiguration::from_index(2, 0b00)) == -1.0);
    CHECK(ising_energy(pair, SpinConfiguration::from_index(2, 0b01)) == 1.0);
    CHECK(ising_energy(pair, SpinConfiguration::from_index(2, 0b10)) == 1.0);

    // Zero-field energies are invariant under a global spin flip.
    const IsingModel chain4 = ferromagnet(4, 0.7);
    const Eigen::VectorXd energies = ising_energies(chain4);
    for (Eigen::Index x = 0; x < chain4.states(); ++x) {
        CHECK(energies(x) == energies(chain4.states() - 1 - x));
    }
}

TEST_CASE("gibbs distribution") {
    const ProbabilityDistribution hot = gibbs_distribution(ferromagnet(3, 0.0));
    for (Eigen::Index x = 0; x < 8; ++x) CHECK(std::abs(hot(x) - 0.125) <= 1e-15);

    const double beta = 0.7, h = 0.3;
    const ProbabilityDistribution solo = gibbs_distribution(single_spin(h, beta));
    const double expected_up = std::exp(beta * h) / (std::exp(beta * h) + std::exp(-beta * h));
    CHECK(std::abs(solo(1) - expected_up) <= 1e-14);

    const ProbabilityDistribution pair = gibbs_distribution(ferromagnet(2, 1.0));
    const double e = std::exp(1.0);
    CHECK(std::abs(pair(0b11) - e / (2.0 * e + 2.0 / e)) <= 1e-14);
    CHECK(std::abs(pair(0b00) - e / (2.0 * e + 2.0 / e)) <= 1e-14);
}

TEST_CASE("glauber generator rates") {
    const Generator hot = glauber_generator(ferromagnet(2, 0.0));
    for (Eigen::Index x = 0; x < 4; ++x) {
        for (int i = 0; i < 2; ++i) {
            CHECK(hot(x, x ^ (1 << i)) == 0.5);
        }
    }
    const ProbabilityDistribution hot_pi = generator_stationary(hot);
    for (Eigen::Index x = 0; x < 4; ++x) CHECK(std::abs(hot_pi(x) - 0.25) <= 1e-12);

    const double beta = 0.8, h = 0.6;
    const Generator solo = glauber_generator(single_spin(h, beta));
    const double up_rate = 1.0 / (1.0 + std::exp(-2.0 * beta * h));
    const double down_rate = 1.0 / (1.0 + std::exp(2.0 * beta * h));
    CHECK(std::abs(solo(0, 1) - up_rate) <= 1e-15);
    CHECK(std::abs(solo(1, 0) - down_rate) <= 1e-15);
    CHECK(solo(0, 1) > solo(1, 0));
}

TEST_CASE("glauber dynamics is in detailed balance with the gibbs measure") {
    for (double beta : {0.0, 0.5, 1.0}) {
        const IsingModel m = ferromagnet(2, beta);
        const Generator q = glauber_generator(m);
        const ProbabilityDistribution g = gibbs_distribution(m);
        for (Eigen::Index x = 0; x < 4; ++x) {
            for (int i = 0; i < 2; ++i) {
                const Eigen::Index y = x ^ (1 << i);
                CHECK(std::abs(g(x) * q(x, y) - g(y) * q(y, x)) <= 1e-12);
            }
        }
        // Stationarity and the departure-rate cap.
        CHECK((g.weights().transpose() * q.rates()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(q.max_departure_rate() <= 2.0);
        // The uniformized jump chain inherits reversibility.
        const UniformizedChain u = uniformize(q, 2.0);
        CHECK(is_reversible(u.jump_chain, g, 1e-12));
    }
}

TEST_CASE("random models stay in detailed balance and stationary") {
    SeededRng rng(91);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + rep % 4;
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                j(a, b) = rng.uniform(-1.0, 1.0);
                j(b, a) = j(a, b);
            }
        }
        Eigen::VectorXd h(n);
        for (int a = 0; a < n; ++a) h(a) = rng.uniform(-0.5, 0.5);
        const IsingModel m(std::move(j), std::move(h), rng.uniform(0.0, 1.5));
        const Generator q = glauber_generator(m);
        const ProbabilityDistribution g = gibbs_distribution(m);
        for (Eigen::Index x = 0; x < m.states(); ++x) {
            for (int s = 0; s < n; ++s) {
                const Eigen::Index y = x ^ (Eigen::Index{1} << s);
                CHECK(std::abs(g(x) * q(x, y) - g(y) * q(y, x)) <= 1e-12);
            }
        }
        CHECK((g.weights().transpose() * q.rates()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(q.max_departure_rate() <= static_cast<double>(n));
    }
}

TEST_CASE("infinite-temperature dynamics is a hypercube walk") {
    const int n = 3;
    const Generator q = glauber_generator(ferromagnet(n, 0.0));
    const ProbabilityDistribution pi = ProbabilityDistribution::uniform(8);

    // At lambda = n the jump chain is the lazy hypercube walk: eigenvalues
    // 1 - k/n with binomial multiplicities.
    const Spectrum lazy_walk = reversible_spectrum(uniformize(q, n).jump_chain, pi);
    const double expected_lazy[] = {1.0, 2.0 / 3, 2.0 / 3, 2.0 / 3, 1.0 / 3, 1.0 / 3,
                                    1.0 / 3, 0.0};
    for (int j = 0; j < 8; ++j) {
        CHECK(std::abs(lazy_walk.eigenvalues(j) - expected_lazy[j]) <= 1e-10);
    }

    // At the exact departure rate n/2 it is the plain walk, whose second
    // eigenvalue is 1 - 2/n.
    const Spectrum walk = reversible_spectrum(uniformize(q, n / 2.0).jump_chain, pi);
    CHECK(std::abs(walk.eigenvalues(1) - (1.0 - 2.0 / n)) <= 1e-10);
}

TEST_CASE("equal models reduce the experiment to the mixing time") {
    const IsingModel m = ferromagnet(2, 0.5);
    const Generator q = glauber_generator(m);
    ContinuousExperimentOptions opts;
    opts.grid = 0.05;
    opts.t_cap = 5.0;
    const ContinuousAdiabaticReport rep = adiabatic_ising_experiment(m, m, 0.25, opts);
    const double t_mix = mixing_time_continuous(q, 0.25, 5.0, 0.05);
    CHECK(rep.measured_time == doctest::Approx(t_mix).epsilon(1e-12));
}

TEST_CASE("ising adiabatic run stays under the bound across eps") {
    const IsingModel cold = ferromagnet(2, 1.0);
    const IsingModel warm = ferromagnet(2, 0.2);
    for (double eps : {0.4, 0.2, 0.1}) {
        const ContinuousAdiabaticReport rep = adiabatic_ising_experiment(warm, cold, eps);
        CHECK(rep.measured_time <= rep.theoretical_bound * (1.0 + 1e-12));
    }
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(IsingModel(Eigen::MatrixXd::Zero(2, 2), Eigen::VectorXd::Zero(2), -0.5),
                    InvalidInputError);
    Eigen::MatrixXd diag = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(IsingModel(diag, Eigen::VectorXd::Zero(2), 1.0), InvalidInputError);
    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, 2, 0;
    CHECK_THROWS_AS(IsingModel(asym, Eigen::VectorXd::Zero(2), 1.0), StructureError);
}
