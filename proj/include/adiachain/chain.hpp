#ifndef ADIACHAIN_CHAIN_HPP
#define ADIACHAIN_CHAIN_HPP

#include <Eigen/Dense>

#include "adiachain/errors.hpp"

namespace adiachain {

// Default tolerance for validating constructed values (entry clamping and
// sum checks).
inline constexpr double kValidationTol = 1e-12;
// Default tolerance for fixed-point and spectral residuals.
inline constexpr double kResidualTol = 1e-10;
// Dense pipeline limit on the number of states.
inline constexpr Eigen::Index kMaxStates = 4096;

// Probability distribution over a finite state space: nonnegative weights
// summing to one. Entries in (-tol, 0) left over from upstream arithmetic
// are clamped to zero and the vector renormalized; anything more negative is
// rejected. `sum_tol` (0 means "use tol") bounds |sum - 1|.
class ProbabilityDistribution {
public:
    explicit ProbabilityDistribution(Eigen::VectorXd weights,
                                     double tol = kValidationTol,
                                     double sum_tol = 0.0);

    static ProbabilityDistribution point_mass(Eigen::Index n, Eigen::Index x);
    static ProbabilityDistribution uniform(Eigen::Index n);

    Eigen::Index size() const { return weights_.size(); }
    double operator()(Eigen::Index x) const { return weights_(x); }
    const Eigen::VectorXd& weights() const { return weights_; }
    double min_weight() const { return weights_.minCoeff(); }

private:
    Eigen::VectorXd weights_;
};

// Dense row-stochastic square matrix. Same clamping policy as
// ProbabilityDistribution, applied per row.
class StochasticMatrix {
public:
    explicit StochasticMatrix(Eigen::MatrixXd entries,
                              double tol = kValidationTol,
                              double sum_tol = 0.0);

    static StochasticMatrix identity(Eigen::Index n);

    Eigen::Index size() const { return entries_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
    const Eigen::MatrixXd& entries() const { return entries_; }

private:
    Eigen::MatrixXd entries_;
};

// Total variation distance, half the L1 distance. The raw overload is used
// for rows of evolving matrices.
double tv_distance(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu);
double tv_distance(const ProbabilityDistribution& mu, const ProbabilityDistribution& nu);

// Unique stationary distribution of an irreducible aperiodic chain, computed
// from the linear system (P^T - I) pi = 0 with a normalization row appended.
// Throws StructureError naming the failed check for reducible or periodic
// inputs, NumericalError if the fixed-point residual exceeds kResidualTol.
ProbabilityDistribution stationary_distribution(const StochasticMatrix& P,
                                                double tol = kValidationTol);

// Least-squares stationary solve without structural gates: solves
// [balance; 1^T] x = [0; 1] where balance is P^T - I (discrete) or Q^T
// (continuous). Used where a frozen or precondition-violating chain should
// surface as a scan cap failure rather than a validation error.
Eigen::VectorXd stationary_from_balance(const Eigen::MatrixXd& balance);

// Detailed balance: |pi(x)p(x,y) - pi(y)p(y,x)| <= tol for all x, y.
bool is_reversible(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                   double tol);

// Strong connectivity of the positivity pattern.
bool is_irreducible(const Eigen::MatrixXd& M);

// Primitivity: M^k is entrywise positive for some k <= (n-1)^2 + 1, the
// Wielandt exponent. Tested by repeated boolean squaring of the positivity
// pattern, so the check is finite and exact.
bool is_irreducible_aperiodic(const Eigen::MatrixXd& M);

// Lazy chain (I + P) / 2.
StochasticMatrix lazy(const StochasticMatrix& P);

}  // namespace adiachain

#endif  // ADIACHAIN_CHAIN_HPP
