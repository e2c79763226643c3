#include "adiachain/spectral.hpp"

#include <cmath>
#include <string>

namespace adiachain {

Spectrum reversible_spectrum(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                             double tol) {
    const Eigen::Index n = P.size();
    if (pi.size() != n) throw InvalidInputError("reversible_spectrum: dimension mismatch");
    if (pi.min_weight() <= 0.0) {
        throw InvalidInputError("reversible_spectrum: stationary weights must be strictly "
                                "positive");
    }
    if (!is_reversible(P, pi, tol)) {
        throw StructureError("reversible_spectrum: detailed balance violated beyond tolerance " +
                             std::to_string(tol));
    }
    const Eigen::VectorXd sq = pi.weights().array().sqrt();
    Eigen::MatrixXd s = sq.asDiagonal() * P.entries() * sq.cwiseInverse().asDiagonal();
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol) {
        throw StructureError("reversible_spectrum: symmetric conjugate deviates from symmetry "
                             "by " + std::to_string(asym));
    }
    s = 0.5 * (s + s.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    if (es.info() != Eigen::Success) {
        throw NumericalError("reversible_spectrum: eigensolver failed", 0.0);
    }
    Eigen::VectorXd vals = es.eigenvalues().reverse();
    if (std::abs(vals(0) - 1.0) > kResidualTol) {
        throw NumericalError("reversible_spectrum: top eigenvalue deviates from 1",
                             std::abs(vals(0) - 1.0));
    }
    if (vals.minCoeff() < -1.0 - kResidualTol || vals.maxCoeff() > 1.0 + kResidualTol) {
        throw NumericalError("reversible_spectrum: eigenvalue outside [-1, 1]",
                             vals.cwiseAbs().maxCoeff() - 1.0);
    }
    return Spectrum{std::move(vals)};
}

GapSummary spectral_gap(const Spectrum& s, double tol) {
    const Eigen::Index n = s.eigenvalues.size();
    if (n == 0) throw InvalidInputError("spectral_gap: empty spectrum");
    if (n == 1) return GapSummary{1.0, 1.0};
    const double sub = std::max(std::abs(s.eigenvalues(1)), std::abs(s.eigenvalues(n - 1)));
    if (sub >= 1.0 - tol) {
        throw StructureError("spectral_gap: second-largest absolute eigenvalue " +
                             std::to_string(sub) +
                             " is 1 within tolerance; chain is not irreducible and aperiodic");
    }
    const double gap = 1.0 - sub;
    return GapSummary{gap, 1.0 / gap};
}

std::pair<double, double> mixing_time_bounds(const GapSummary& g,
                                             const ProbabilityDistribution& pi, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw InvalidInputError("mixing_time_bounds: eps must lie in (0, 1/2), got " +
                                std::to_string(eps));
    }
    const double pi_min = pi.min_weight();
    if (pi_min <= 0.0) {
        throw InvalidInputError("mixing_time_bounds: stationary weights must be strictly "
                                "positive");
    }
    const double lower = (g.relaxation_time - 1.0) * std::log(1.0 / (2.0 * eps));
    const double upper = g.relaxation_time * std::log(1.0 / (eps * pi_min));
    return {lower, upper};
}

}  // namespace adiachain
