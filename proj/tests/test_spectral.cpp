#include <doctest.h>

#include <cmath>

#include "adiachain/mixing.hpp"
#include "adiachain/random_chains.hpp"
#include "adiachain/spectral.hpp"

using namespace adiachain;

namespace {

Spectrum spec(std::initializer_list<double> vals) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (double x : vals) v(i++) = x;
    return Spectrum{v};
}

}  // namespace

TEST_CASE("reversible spectrum of small chains") {
    Eigen::MatrixXd half = Eigen::MatrixXd::Constant(2, 2, 0.5);
    const Spectrum s1 =
        reversible_spectrum(StochasticMatrix(half), ProbabilityDistribution::uniform(2));
    CHECK(std::abs(s1.eigenvalues(0) - 1.0) <= 1e-12);
    CHECK(std::abs(s1.eigenvalues(1)) <= 1e-12);

    Eigen::MatrixXd sticky(2, 2);
    sticky << 0.9, 0.1, 0.1, 0.9;
    const Spectrum s2 =
        reversible_spectrum(StochasticMatrix(sticky), ProbabilityDistribution::uniform(2));
    CHECK(std::abs(s2.eigenvalues(1) - 0.8) <= 1e-12);

    // Simple random walk on K4.
    Eigen::MatrixXd k4 = Eigen::MatrixXd::Constant(4, 4, 1.0 / 3.0);
    k4.diagonal().setZero();
    const Spectrum s3 =
        reversible_spectrum(StochasticMatrix(k4), ProbabilityDistribution::uniform(4));
    CHECK(std::abs(s3.eigenvalues(0) - 1.0) <= 1e-12);
    for (int j = 1; j < 4; ++j) CHECK(std::abs(s3.eigenvalues(j) + 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("symmetric conjugate preserves the spectrum of P") {
    // Cross-check against the general (non-symmetric) eigensolver applied to
    // P itself.
    SeededRng seeds(44);
    for (int rep = 0; rep < 10; ++rep) {
        const Eigen::Index n = 3 + rep % 4;
        const StochasticMatrix p =
            generate_chain({n, ChainConstruction::reversible_random, seeds.bits()});
        const ProbabilityDistribution pi = stationary_distribution(p);
        const Eigen::VectorXd via_conjugate = reversible_spectrum(p, pi).eigenvalues;
        Eigen::EigenSolver<Eigen::MatrixXd> es(p.entries());
        Eigen::VectorXd direct = es.eigenvalues().real();
        CHECK(es.eigenvalues().imag().cwiseAbs().maxCoeff() <= 1e-10);
        std::sort(direct.data(), direct.data() + n, std::greater<double>());
        CHECK((via_conjugate - direct).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("reversible spectrum rejects non-reversible input") {
    Eigen::MatrixXd cyc(3, 3);
    cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    CHECK_THROWS_AS(
        reversible_spectrum(StochasticMatrix(cyc), ProbabilityDistribution::uniform(3)),
        StructureError);
}

TEST_CASE("spectral gap from a spectrum") {
    const GapSummary g1 = spectral_gap(spec({1.0, 0.8}));
    CHECK(std::abs(g1.gap - 0.2) <= 1e-12);
    CHECK(std::abs(g1.relaxation_time - 5.0) <= 1e-12);

    const GapSummary g2 = spectral_gap(spec({1.0, 0.0}));
    CHECK(g2.gap == 1.0);
    CHECK(g2.relaxation_time == 1.0);

    const GapSummary g3 = spectral_gap(spec({1.0, 0.5, -0.7}));
    CHECK(std::abs(g3.gap - 0.3) <= 1e-12);

    CHECK_THROWS_AS(spectral_gap(spec({1.0, 1.0})), StructureError);
    CHECK_THROWS_AS(spectral_gap(spec({1.0, 0.2, -1.0})), StructureError);
    CHECK(spectral_gap(spec({1.0})).gap == 1.0);
}

TEST_CASE("gap times relaxation time is one") {
    SeededRng seeds(41);
    for (int rep = 0; rep < 20; ++rep) {
        const StochasticMatrix p =
            generate_chain({5, ChainConstruction::reversible_random, seeds.bits()});
        const GapSummary g = spectral_gap(reversible_spectrum(p, stationary_distribution(p)));
        CHECK(std::abs(g.gap * g.relaxation_time - 1.0) <= 1e-12);
    }
}

TEST_CASE("mixing time bounds formulas") {
    const ProbabilityDistribution uniform2 = ProbabilityDistribution::uniform(2);

    const auto [l1, u1] = mixing_time_bounds(GapSummary{1.0, 1.0}, uniform2, 0.25);
    CHECK(l1 == 0.0);
    CHECK(u1 > 0.0);

    const auto [l2, u2] = mixing_time_bounds(GapSummary{0.2, 5.0}, uniform2, 0.25);
    CHECK(std::abs(l2 - 4.0 * std::log(2.0)) <= 1e-12);
    CHECK(std::abs(u2 - 5.0 * std::log(8.0)) <= 1e-12);

    Eigen::VectorXd w(2);
    w << 0.1, 0.9;
    const auto [l3, u3] = mixing_time_bounds(GapSummary{0.5, 2.0}, ProbabilityDistribution(w),
                                             0.05);
    CHECK(std::abs(u3 - 2.0 * std::log(200.0)) <= 1e-12);
    CHECK(l3 >= 0.0);

    CHECK_THROWS_AS(mixing_time_bounds(GapSummary{0.5, 2.0}, uniform2, 0.5), InvalidInputError);
    CHECK_THROWS_AS(mixing_time_bounds(GapSummary{0.5, 2.0}, uniform2, 0.0), InvalidInputError);
}

TEST_CASE("lazy chain spectrum is (1 + spectrum) / 2") {
    SeededRng seeds(42);
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::Index n = 3 + rep % 5;
        const StochasticMatrix p =
            generate_chain({n, ChainConstruction::reversible_random, seeds.bits()});
        const ProbabilityDistribution pi = stationary_distribution(p);
        const Eigen::VectorXd base = reversible_spectrum(p, pi).eigenvalues;
        const Eigen::VectorXd lazy_spec = reversible_spectrum(lazy(p), pi).eigenvalues;
        CHECK((lazy_spec - (0.5 * (base.array() + 1.0)).matrix()).cwiseAbs().maxCoeff() <=
              1e-10);
        // For the lazy chain only the top of the spectrum matters.
        const double lazy_gap = spectral_gap(Spectrum{lazy_spec}).gap;
        CHECK(std::abs(lazy_gap - (1.0 - base(1)) / 2.0) <= 1e-10);
        // Twice-lazy chains have spectrum above 1/2.
        const Eigen::VectorXd twice = reversible_spectrum(lazy(lazy(p)), pi).eigenvalues;
        CHECK(twice.minCoeff() >= 0.5 - 1e-10);
    }
}

TEST_CASE("sandwich property on random reversible chains") {
    SeededRng seeds(43);
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::Index n = 3 + rep % 6;
        const StochasticMatrix p =
            generate_chain({n, ChainConstruction::reversible_random, seeds.bits()});
        const ProbabilityDistribution pi = stationary_distribution(p);
        const GapSummary g = spectral_gap(reversible_spectrum(p, pi));
        for (double eps : {0.25, 0.05}) {
            const auto [lower, upper] = mixing_time_bounds(g, pi, eps);
            const double t = static_cast<double>(mixing_time(p, eps));
            CHECK(lower <= t);
            CHECK(t <= upper);
        }
    }
}

TEST_CASE("pipeline holds together at a few hundred states") {
    const StochasticMatrix p =
        generate_chain({128, ChainConstruction::reversible_random, 4242});
    const ProbabilityDistribution pi = stationary_distribution(p);
    const GapSummary g = spectral_gap(reversible_spectrum(p, pi));
    const long t = mixing_time(p, 0.25);
    const auto [lower, upper] = mixing_time_bounds(g, pi, 0.25);
    CHECK(lower <= static_cast<double>(t));
    CHECK(static_cast<double>(t) <= upper);
}
