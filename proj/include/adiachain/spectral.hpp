#ifndef ADIACHAIN_SPECTRAL_HPP
#define ADIACHAIN_SPECTRAL_HPP

#include <utility>

#include <Eigen/Dense>

#include "adiachain/chain.hpp"

namespace adiachain {

// Real spectrum of a reversible chain, sorted descending.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
};

// Spectral gap beta = 1 - max(|lambda_2|, |lambda_n|) and relaxation time
// tau = 1 / beta.
struct GapSummary {
    double gap;
    double relaxation_time;
};

// Spectrum of a reversible chain via the symmetric conjugate
// S = D^{1/2} P D^{-1/2} with D = diag(pi). Reversibility makes S symmetric,
// so a symmetric eigensolver applies and the output is real by construction.
// Throws StructureError on a detailed-balance violation beyond tol.
Spectrum reversible_spectrum(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                             double tol = kResidualTol);

// Gap and relaxation time from a descending spectrum. Eigenvalues within tol
// of 1 in absolute value mean the chain is not irreducible and aperiodic;
// that is a degenerate-spectrum error.
GapSummary spectral_gap(const Spectrum& s, double tol = kResidualTol);

// The relaxation/mixing sandwich for reversible irreducible aperiodic
// chains: returns
//   lower = (tau - 1) * log(1 / (2 eps)),
//   upper = tau * log(1 / (eps * min_x pi(x))).
// Requires 0 < eps < 1/2 (the lower bound needs 2 eps < 1).
std::pair<double, double> mixing_time_bounds(const GapSummary& g,
                                             const ProbabilityDistribution& pi, double eps);

}  // namespace adiachain

#endif  // ADIACHAIN_SPECTRAL_HPP
