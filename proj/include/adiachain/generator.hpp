#ifndef ADIACHAIN_GENERATOR_HPP
#define ADIACHAIN_GENERATOR_HPP

#include <Eigen/Dense>

#include "adiachain/chain.hpp"

namespace adiachain {

// Default truncation tolerance for the uniformization series.
inline constexpr double kSeriesTol = 1e-12;

// Bounded Markov generator: nonnegative off-diagonal rates, zero row sums.
// Off-diagonal entries in (-tol, 0) are clamped to zero; the diagonal is
// recomputed as minus the off-diagonal row sum once the given row sums pass
// the tolerance check.
class Generator {
public:
    explicit Generator(Eigen::MatrixXd rates, double tol = kValidationTol);

    Eigen::Index size() const { return rates_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return rates_(i, j); }
    const Eigen::MatrixXd& rates() const { return rates_; }

    // max_i sum_{j != i} q(i, j)
    double max_departure_rate() const;

private:
    Eigen::MatrixXd rates_;
};

// Uniformized jump chain P_lambda = I + Q / lambda at Poisson rate lambda.
struct UniformizedChain {
    double lambda;
    StochasticMatrix jump_chain;
};

// Requires lambda >= max departure rate; the error names the violating row.
UniformizedChain uniformize(const Generator& Q, double lambda);

// Transition matrix P(t) = sum_n e^{-lambda t} (lambda t)^n / n! P_lambda^n,
// truncated once the accumulated Poisson mass exceeds 1 - tol, so the result
// is row-stochastic within tol (one-sided deficit). Any admissible lambda
// gives the same matrix within 2 tol; lambda = 0 picks the max departure
// rate.
StochasticMatrix transition_matrix(const Generator& Q, double t, double lambda = 0.0,
                                   double tol = kSeriesTol);

// Convex combination (1 - s) a + s b; a valid generator by convexity.
Generator interpolate_generator(const Generator& a, const Generator& b, double s);

// Stationary distribution of Q from the ungated least-squares solve of
// pi Q = 0 with normalization. Uniqueness is the caller's precondition; a
// frozen chain yields some valid distribution and downstream scans hit
// their caps.
ProbabilityDistribution generator_stationary(const Generator& Q);

}  // namespace adiachain

#endif  // ADIACHAIN_GENERATOR_HPP
