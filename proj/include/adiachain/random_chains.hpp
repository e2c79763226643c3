#ifndef ADIACHAIN_RANDOM_CHAINS_HPP
#define ADIACHAIN_RANDOM_CHAINS_HPP

#include <cstdint>
#include <random>

#include "adiachain/chain.hpp"
#include "adiachain/generator.hpp"
#include "adiachain/hamiltonian.hpp"

namespace adiachain {

// Name of the pseudo-random generator family, recorded in output headers.
inline constexpr const char* kRngName = "mt19937_64";

// Deterministic uniform source; the raw 64-bit stream is mapped to [0, 1)
// directly so draws do not depend on the standard library's distribution
// implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

enum class ChainConstruction { reversible_random, birth_death, lazy_random_walk };

struct RandomChainSpec {
    Eigen::Index n = 2;
    ChainConstruction construction = ChainConstruction::reversible_random;
    std::uint64_t seed = 0;
};

// Seed-deterministic chain factory. The reversible-random construction draws
// a positive target weight vector pi and a symmetric conductance matrix W,
// sets P_ij proportional to W_ij min(1, pi_j / pi_i) and fills the diagonal
// with the leftover mass, so detailed balance holds by construction.
StochasticMatrix generate_chain(const RandomChainSpec& spec);

// Unrestricted row-stochastic matrix (independent positive rows, normalized).
StochasticMatrix random_stochastic_matrix(Eigen::Index n, std::uint64_t seed);

// Strictly positive symmetric A gives a valid Hamiltonian H = I - A.
Hamiltonian random_hamiltonian(Eigen::Index n, std::uint64_t seed);

// Strictly positive off-diagonal rates.
Generator random_generator(Eigen::Index n, std::uint64_t seed);

ProbabilityDistribution random_distribution(Eigen::Index n, SeededRng& rng);

}  // namespace adiachain

#endif  // ADIACHAIN_RANDOM_CHAINS_HPP
