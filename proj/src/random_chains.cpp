#include "adiachain/random_chains.hpp"

#include <cmath>

namespace adiachain {

namespace {

Eigen::MatrixXd symmetric_positive(Eigen::Index n, SeededRng& rng, double lo, double hi) {
    Eigen::MatrixXd w(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            w(i, j) = rng.uniform(lo, hi);
            w(j, i) = w(i, j);
        }
    }
    return w;
}

StochasticMatrix reversible_random(Eigen::Index n, SeededRng& rng) {
    if (n == 1) return StochasticMatrix::identity(1);
    Eigen::VectorXd pi(n);
    for (Eigen::Index i = 0; i < n; ++i) pi(i) = rng.uniform(0.2, 1.2);
    const Eigen::MatrixXd w = symmetric_positive(n, rng, 0.1, 1.1);

    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    double max_row = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            p(i, j) = w(i, j) * std::min(1.0, pi(j) / pi(i));
            row += p(i, j);
        }
        max_row = std::max(max_row, row);
    }
    const double scale = 1.25 * max_row;  // leaves every diagonal positive
    for (Eigen::Index i = 0; i < n; ++i) {
        p.row(i) /= scale;
        p(i, i) = 1.0 - p.row(i).sum();
    }
    return StochasticMatrix(std::move(p));
}

StochasticMatrix birth_death(Eigen::Index n, SeededRng& rng) {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double up = 0.0, down = 0.0;
        if (i + 1 < n) up = rng.uniform(0.1, 0.45);
        if (i > 0) down = rng.uniform(0.1, 0.45);
        if (i + 1 < n) p(i, i + 1) = up;
        if (i > 0) p(i, i - 1) = down;
        p(i, i) = 1.0 - up - down;
    }
    return StochasticMatrix(std::move(p));
}

StochasticMatrix lazy_random_walk(Eigen::Index n, SeededRng& rng) {
    const Eigen::MatrixXd w = symmetric_positive(n, rng, 0.1, 1.1);
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p.row(i) = w.row(i) / w.row(i).sum();
    return lazy(StochasticMatrix(std::move(p)));
}

}  // namespace

StochasticMatrix generate_chain(const RandomChainSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxStates) {
        throw InvalidInputError("generate_chain: dimension outside [1, " +
                                std::to_string(kMaxStates) + "]");
    }
    SeededRng rng(spec.seed);
    switch (spec.construction) {
        case ChainConstruction::reversible_random:
            return reversible_random(spec.n, rng);
        case ChainConstruction::birth_death:
            return birth_death(spec.n, rng);
        case ChainConstruction::lazy_random_walk:
            return lazy_random_walk(spec.n, rng);
    }
    throw InvalidInputError("generate_chain: unknown construction");
}

StochasticMatrix random_stochastic_matrix(Eigen::Index n, std::uint64_t seed) {
    SeededRng rng(seed);
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) p(i, j) = rng.uniform(0.05, 1.05);
        p.row(i) /= p.row(i).sum();
    }
    return StochasticMatrix(std::move(p));
}

Hamiltonian random_hamiltonian(Eigen::Index n, std::uint64_t seed) {
    SeededRng rng(seed);
    const Eigen::MatrixXd a = symmetric_positive(n, rng, 0.2, 1.2);
    return Hamiltonian(Eigen::MatrixXd::Identity(n, n) - a);
}

Generator random_generator(Eigen::Index n, std::uint64_t seed) {
    SeededRng rng(seed);
    Eigen::MatrixXd q(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j) q(i, j) = rng.uniform(0.05, 2.0);
        }
        q(i, i) = 0.0;
        q(i, i) = -q.row(i).sum();
    }
    return Generator(std::move(q));
}

ProbabilityDistribution random_distribution(Eigen::Index n, SeededRng& rng) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = -std::log(1.0 - rng.uniform());
    v /= v.sum();
    return ProbabilityDistribution(std::move(v));
}

}  // namespace adiachain
