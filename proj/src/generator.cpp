#include "adiachain/generator.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace adiachain {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Above this value of lambda*t the series is evaluated by halving the time
// and squaring, keeping the leading Poisson weight well away from underflow.
constexpr double kSeriesSplitThreshold = 500.0;

}  // namespace

Generator::Generator(Eigen::MatrixXd rates, double tol) : rates_(std::move(rates)) {
    const Eigen::Index n = rates_.rows();
    if (n != rates_.cols() || n == 0) {
        throw InvalidInputError("generator: matrix must be square and non-empty");
    }
    if (n > kMaxStates) {
        throw InvalidInputError("generator: dimension exceeds the dense pipeline limit");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        double given_sum = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = rates_(i, j);
            if (!std::isfinite(v)) {
                throw InvalidInputError("generator: non-finite entry at (" + std::to_string(i) +
                                        ", " + std::to_string(j) + ")");
            }
            given_sum += v;
            if (i == j) continue;
            if (v < 0.0) {
                if (v <= -tol) {
                    throw InvalidInputError("generator: negative rate " + num(v) +
                                            " at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
                }
                rates_(i, j) = 0.0;
            }
        }
        if (std::abs(given_sum) > tol * std::max(1.0, rates_.row(i).cwiseAbs().maxCoeff())) {
            throw InvalidInputError("generator: row " + std::to_string(i) + " sums to " +
                                    std::to_string(given_sum) + ", expected 0");
        }
        rates_(i, i) = 0.0;
        rates_(i, i) = -rates_.row(i).sum();
    }
}

double Generator::max_departure_rate() const {
    return std::max(0.0, -rates_.diagonal().minCoeff());
}

UniformizedChain uniformize(const Generator& Q, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidInputError("uniformize: lambda must be positive and finite");
    }
    for (Eigen::Index i = 0; i < Q.size(); ++i) {
        const double departure = -Q(i, i);
        if (departure > lambda * (1.0 + 1e-15)) {
            throw InvalidInputError("uniformize: lambda " + std::to_string(lambda) +
                                    " is below the departure rate " + std::to_string(departure) +
                                    " of row " + std::to_string(i));
        }
    }
    const Eigen::Index n = Q.size();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) + Q.rates() / lambda;
    return UniformizedChain{lambda, StochasticMatrix(std::move(p))};
}

StochasticMatrix transition_matrix(const Generator& Q, double t, double lambda, double tol) {
    if (t < 0.0 || !std::isfinite(t)) {
        throw InvalidInputError("transition_matrix: time must be nonnegative and finite");
    }
    if (!(tol > 0.0)) throw InvalidInputError("transition_matrix: tol must be positive");
    const Eigen::Index n = Q.size();
    if (lambda == 0.0) {
        const double dep = Q.max_departure_rate();
        lambda = dep > 0.0 ? dep : 1.0;
    }
    if (t == 0.0) return StochasticMatrix::identity(n);
    if (lambda * t > kSeriesSplitThreshold) {
        const StochasticMatrix half = transition_matrix(Q, t / 2.0, lambda, tol / 2.0);
        return StochasticMatrix(half.entries() * half.entries(), kValidationTol, tol + 1e-12);
    }
    const UniformizedChain u = uniformize(Q, lambda);
    const Eigen::MatrixXd& p = u.jump_chain.entries();

    double term = std::exp(-lambda * t);  // Poisson weight, n = 0
    double mass = term;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd acc = term * power;
    long k = 0;
    const long k_cap = static_cast<long>(lambda * t + 60.0 * std::sqrt(lambda * t + 1.0) + 60.0);
    while (mass < 1.0 - tol) {
        if (++k > k_cap) {
            throw NumericalError("transition_matrix: uniformization series failed to accumulate "
                                 "the Poisson mass",
                                 1.0 - mass);
        }
        power = power * p;
        term *= lambda * t / static_cast<double>(k);
        acc += term * power;
        mass += term;
    }
    return StochasticMatrix(std::move(acc), kValidationTol, tol + 1e-12);
}

Generator interpolate_generator(const Generator& a, const Generator& b, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw InvalidInputError("interpolate_generator: s must lie in [0, 1], got " +
                                std::to_string(s));
    }
    if (a.size() != b.size()) {
        throw InvalidInputError("interpolate_generator: dimension mismatch");
    }
    return Generator((1.0 - s) * a.rates() + s * b.rates());
}

ProbabilityDistribution generator_stationary(const Generator& Q) {
    Eigen::VectorXd pi = stationary_from_balance(Q.rates().transpose());
    return ProbabilityDistribution(std::move(pi), kValidationTol, 1e-9);
}

}  // namespace adiachain
