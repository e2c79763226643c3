#ifndef ADIACHAIN_GLAUBER_ISING_HPP
#define ADIACHAIN_GLAUBER_ISING_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "adiachain/adiabatic_continuous.hpp"
#include "adiachain/chain.hpp"
#include "adiachain/generator.hpp"

namespace adiachain {

inline constexpr int kMaxSpins = 12;  // 2^12 states, the dense pipeline limit

// Finite Ising model: n spins with symmetric zero-diagonal couplings J,
// local fields h and inverse temperature beta. The energy of a
// configuration sigma in {-1, +1}^n is
//   E(sigma) = - sum_{i<j} J_ij sigma_i sigma_j - sum_i h_i sigma_i.
class IsingModel {
public:
    IsingModel(Eigen::MatrixXd couplings, Eigen::VectorXd fields, double inverse_temperature,
               double tol = kValidationTol);

    int spins() const { return static_cast<int>(fields_.size()); }
    Eigen::Index states() const { return Eigen::Index{1} << spins(); }
    const Eigen::MatrixXd& couplings() const { return couplings_; }
    const Eigen::VectorXd& fields() const { return fields_; }
    double inverse_temperature() const { return beta_; }

private:
    Eigen::MatrixXd couplings_;
    Eigen::VectorXd fields_;
    double beta_;
};

// Spin configuration with the canonical integer encoding bit i = (sigma_i+1)/2.
struct SpinConfiguration {
    std::vector<int> spins;  // entries are -1 or +1

    static SpinConfiguration from_index(int n, std::uint32_t index);
    std::uint32_t to_index() const;
};

double ising_energy(const IsingModel& m, const SpinConfiguration& sigma);

// Energies of all 2^n configurations in encoding order.
Eigen::VectorXd ising_energies(const IsingModel& m);

// Gibbs measure pi(sigma) proportional to exp(-beta E(sigma)); the minimum
// energy is subtracted before exponentiation to guard against overflow.
ProbabilityDistribution gibbs_distribution(const IsingModel& m);

// Continuous-time single-spin-flip dynamics with heat-bath rates
//   q(sigma, sigma^i) = 1 / (1 + exp(beta (E(sigma^i) - E(sigma)))),
// which satisfy detailed balance with respect to the Gibbs measure. Every
// flip rate is below 1, so the departure rates are below n.
Generator glauber_generator(const IsingModel& m);

// Builds both Glauber generators and runs the continuous adiabatic
// experiment along the generator interpolation Q[s] = (1-s) Q_init + s Q_final.
// The uniformization rate defaults to n.
ContinuousAdiabaticReport adiabatic_ising_experiment(const IsingModel& initial,
                                                     const IsingModel& final_model, double eps,
                                                     ContinuousExperimentOptions opts = {});

}  // namespace adiachain

#endif  // ADIACHAIN_GLAUBER_ISING_HPP
