#ifndef ADIACHAIN_HAMILTONIAN_HPP
#define ADIACHAIN_HAMILTONIAN_HPP

#include <utility>

#include <Eigen/Dense>

#include "adiachain/chain.hpp"

namespace adiachain {

// Real symmetric matrix H whose complement I - H is entrywise nonnegative,
// irreducible and aperiodic. Construction validates, in order: symmetry,
// nonnegativity of I - H, irreducibility, aperiodicity, and names the first
// failed condition with its indices. Entries of I - H in (-tol, 0) are
// treated as upstream roundoff and clamped to zero.
class Hamiltonian {
public:
    explicit Hamiltonian(Eigen::MatrixXd entries, double tol = kValidationTol);

    Eigen::Index size() const { return entries_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    Eigen::MatrixXd complement() const;  // I - H

private:
    Eigen::MatrixXd entries_;
};

Hamiltonian validate_hamiltonian(const Eigen::MatrixXd& H, double tol = kValidationTol);

// Dominant eigenpair of a symmetric nonnegative primitive matrix: the value
// strictly exceeds every other eigenvalue in absolute value and the vector
// is strictly positive with unit Euclidean norm.
struct PerronPair {
    double value;
    Eigen::VectorXd vector;
};

PerronPair perron(const Eigen::MatrixXd& M);

// Output of the Hamiltonian -> chain conversion.
struct ConversionResult {
    StochasticMatrix chain;                  // P_ij = alpha_j a_ij / ((1 - lambda0) alpha_i)
    ProbabilityDistribution stationary;      // pi = alpha^2 (alpha unit norm)
    double ground_energy;                    // lambda0, lowest eigenvalue of H
    double hamiltonian_gap;                  // beta_H = lambda1 - lambda0
    double chain_gap;                        // beta = 1 - max(|r_1|, |r_N|)
};

// Converts H into a reversible chain through the Perron pair of I - H. The
// chain spectrum is r_j = (1 - lambda_j) / (1 - lambda0); the gap relation
// beta (1 - lambda0) = beta_H holds whenever r_1 >= |r_N|, and chain_gap is
// always computed from its definition so the caller can check that
// condition.
ConversionResult hamiltonian_to_chain(const Hamiltonian& H);

// Inverse direction: H = I - (1 - lambda0) D^{1/2} P D^{-1/2} with
// D = diag(pi). The ground energy is not determined by the chain, so it is
// an explicit input; lambda0 = 0 yields a Hamiltonian whose gap equals the
// chain gap.
Hamiltonian chain_to_hamiltonian(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                                 double lambda0 = 0.0, double tol = kResidualTol);

// Gap of the lazy chain of H's conversion, measured from the lazy spectrum,
// next to the predicted value beta_H / (2 (1 - lambda0)).
std::pair<double, double> lazy_gap_relation(const Hamiltonian& H);

}  // namespace adiachain

#endif  // ADIACHAIN_HAMILTONIAN_HPP
