#include "adiachain/glauber_ising.hpp"

#include <cmath>
#include <string>

namespace adiachain {

IsingModel::IsingModel(Eigen::MatrixXd couplings, Eigen::VectorXd fields,
                       double inverse_temperature, double tol)
    : couplings_(std::move(couplings)), fields_(std::move(fields)), beta_(inverse_temperature) {
    const Eigen::Index n = fields_.size();
    if (n < 1 || n > kMaxSpins) {
        throw InvalidInputError("ising model: spin count must lie in [1, " +
                                std::to_string(kMaxSpins) + "]");
    }
    if (couplings_.rows() != n || couplings_.cols() != n) {
        throw InvalidInputError("ising model: coupling matrix must be n x n");
    }
    if (!(beta_ >= 0.0) || !std::isfinite(beta_)) {
        throw InvalidInputError("ising model: inverse temperature must be >= 0 and finite");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(fields_(i))) {
            throw InvalidInputError("ising model: non-finite field at index " +
                                    std::to_string(i));
        }
        if (std::abs(couplings_(i, i)) > tol) {
            throw InvalidInputError("ising model: coupling diagonal must be zero, got " +
                                    std::to_string(couplings_(i, i)) + " at index " +
                                    std::to_string(i));
        }
        couplings_(i, i) = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!std::isfinite(couplings_(i, j))) {
                throw InvalidInputError("ising model: non-finite coupling at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            if (std::abs(couplings_(i, j) - couplings_(j, i)) > tol) {
                throw StructureError("ising model: couplings asymmetric at (" +
                                     std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    couplings_ = (0.5 * (couplings_ + couplings_.transpose().eval())).eval();
}

SpinConfiguration SpinConfiguration::from_index(int n, std::uint32_t index) {
    if (n < 1 || n > kMaxSpins) throw InvalidInputError("spin configuration: bad spin count");
    if (index >> n != 0) throw InvalidInputError("spin configuration: index out of range");
    SpinConfiguration sigma;
    sigma.spins.resize(n);
    for (int i = 0; i < n; ++i) sigma.spins[i] = (index >> i & 1) ? 1 : -1;
    return sigma;
}

std::uint32_t SpinConfiguration::to_index() const {
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] != 1 && spins[i] != -1) {
            throw InvalidInputError("spin configuration: entries must be +1 or -1");
        }
        if (spins[i] == 1) index |= std::uint32_t{1} << i;
    }
    return index;
}

double ising_energy(const IsingModel& m, const SpinConfiguration& sigma) {
    const int n = m.spins();
    if (static_cast<int>(sigma.spins.size()) != n) {
        throw InvalidInputError("ising_energy: dimension mismatch");
    }
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            energy -= m.couplings()(i, j) * sigma.spins[i] * sigma.spins[j];
        }
        energy -= m.fields()(i) * sigma.spins[i];
    }
    return energy;
}

Eigen::VectorXd ising_energies(const IsingModel& m) {
    const Eigen::Index state_count = m.states();
    Eigen::VectorXd energies(state_count);
    for (Eigen::Index x = 0; x < state_count; ++x) {
        energies(x) = ising_energy(
            m, SpinConfiguration::from_index(m.spins(), static_cast<std::uint32_t>(x)));
    }
    return energies;
}

ProbabilityDistribution gibbs_distribution(const IsingModel& m) {
    Eigen::VectorXd energies = ising_energies(m);
    const double ground = energies.minCoeff();
    Eigen::VectorXd weights =
        (-m.inverse_temperature() * (energies.array() - ground)).exp().matrix();
    weights /= weights.sum();
    return ProbabilityDistribution(std::move(weights), kValidationTol, 1e-9);
}

Generator glauber_generator(const IsingModel& m) {
    const int n = m.spins();
    const Eigen::Index state_count = m.states();
    const Eigen::VectorXd energies = ising_energies(m);
    Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(state_count, state_count);
    for (Eigen::Index x = 0; x < state_count; ++x) {
        for (int i = 0; i < n; ++i) {
            const Eigen::Index y = x ^ (Eigen::Index{1} << i);
            const double delta = energies(y) - energies(x);
            rates(x, y) = 1.0 / (1.0 + std::exp(m.inverse_temperature() * delta));
        }
        rates(x, x) = -rates.row(x).sum();
    }
    return Generator(std::move(rates));
}

ContinuousAdiabaticReport adiabatic_ising_experiment(const IsingModel& initial,
                                                     const IsingModel& final_model, double eps,
                                                     ContinuousExperimentOptions opts) {
    if (initial.spins() != final_model.spins()) {
        throw InvalidInputError("adiabatic_ising_experiment: spin counts differ");
    }
    const Generator q_initial = glauber_generator(initial);
    const Generator q_final = glauber_generator(final_model);
    if (opts.lambda == 0.0) opts.lambda = static_cast<double>(initial.spins());
    return continuous_experiment(q_initial, q_final, eps, opts);
}

}  // namespace adiachain
