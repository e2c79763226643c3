#include "adiachain/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "adiachain/spectral.hpp"

namespace adiachain {

namespace {

constexpr double kPerronPositivityFloor = 1e-13;

std::string indices(Eigen::Index i, Eigen::Index j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

Hamiltonian::Hamiltonian(Eigen::MatrixXd entries, double tol) : entries_(std::move(entries)) {
    const Eigen::Index n = entries_.rows();
    if (n != entries_.cols() || n < 2) {
        throw InvalidInputError("hamiltonian: matrix must be square with dimension >= 2");
    }
    if (n > kMaxStates) {
        throw InvalidInputError("hamiltonian: dimension exceeds the dense pipeline limit");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!std::isfinite(entries_(i, j))) {
                throw InvalidInputError("hamiltonian: non-finite entry at " + indices(i, j));
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (std::abs(entries_(i, j) - entries_(j, i)) > tol) {
                throw StructureError("hamiltonian: asymmetric at " + indices(i, j) + ": " +
                                     std::to_string(entries_(i, j)) + " vs " +
                                     std::to_string(entries_(j, i)));
            }
        }
    }
    entries_ = (0.5 * (entries_ + entries_.transpose().eval())).eval();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = (i == j ? 1.0 : 0.0) - entries_(i, j);
            if (a < 0.0) {
                if (a <= -tol) {
                    throw StructureError("hamiltonian: I - H has negative entry " +
                                         std::to_string(a) + " at " + indices(i, j));
                }
                entries_(i, j) = (i == j ? 1.0 : 0.0);
                entries_(j, i) = entries_(i, j);
            }
        }
    }
    const Eigen::MatrixXd a = complement();
    if (!is_irreducible(a)) {
        throw StructureError("hamiltonian: I - H is reducible "
                             "(positivity pattern is not strongly connected)");
    }
    if (!is_irreducible_aperiodic(a)) {
        throw StructureError("hamiltonian: I - H is periodic "
                             "(no power of the pattern is entrywise positive)");
    }
}

Eigen::MatrixXd Hamiltonian::complement() const {
    return Eigen::MatrixXd::Identity(size(), size()) - entries_;
}

Hamiltonian validate_hamiltonian(const Eigen::MatrixXd& H, double tol) {
    return Hamiltonian(H, tol);
}

PerronPair perron(const Eigen::MatrixXd& M) {
    if (!is_irreducible_aperiodic(M)) {
        throw StructureError("perron: matrix is not irreducible and aperiodic");
    }
    const Eigen::Index n = M.rows();
    const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
    if (asym > kValidationTol * std::max(1.0, M.cwiseAbs().maxCoeff())) {
        throw InvalidInputError("perron: matrix must be symmetric (asymmetry " +
                                std::to_string(asym) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
    if (es.info() != Eigen::Success) {
        throw NumericalError("perron: eigensolver failed", 0.0);
    }
    const Eigen::VectorXd& vals = es.eigenvalues();  // ascending
    const double value = vals(n - 1);
    const double runner_up =
        n >= 2 ? std::max(std::abs(vals(0)), std::abs(vals(n - 2))) : 0.0;
    if (!(value > 0.0) || value - runner_up <= 0.0) {
        throw NumericalError("perron: dominant eigenvalue is not strictly dominant",
                             value - runner_up);
    }
    Eigen::VectorXd vec = es.eigenvectors().col(n - 1);
    Eigen::Index imax = 0;
    vec.cwiseAbs().maxCoeff(&imax);
    if (vec(imax) < 0.0) vec = -vec;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (vec(i) < kPerronPositivityFloor) {
            throw StructureError("perron: eigenvector entry " + std::to_string(vec(i)) +
                                 " at index " + std::to_string(i) +
                                 " is not strictly positive; matrix is near-reducible");
        }
    }
    const double residual = (M * vec - value * vec).cwiseAbs().maxCoeff();
    if (residual > kResidualTol * std::max(1.0, std::abs(value))) {
        throw NumericalError("perron: eigenpair residual out of tolerance", residual);
    }
    return PerronPair{value, std::move(vec)};
}

ConversionResult hamiltonian_to_chain(const Hamiltonian& H) {
    const Eigen::Index n = H.size();
    const Eigen::MatrixXd a = H.complement();
    const PerronPair pp = perron(a);
    const double lambda0 = 1.0 - pp.value;

    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            p(i, j) = pp.vector(j) * a(i, j) / (pp.value * pp.vector(i));
    // (I - H) alpha = (1 - lambda0) alpha is exactly the row-sum identity.
    const double row_residual = (p.rowwise().sum().array() - 1.0).abs().maxCoeff();
    if (row_residual > kResidualTol) {
        throw NumericalError("hamiltonian_to_chain: converted rows deviate from 1", row_residual);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const Eigen::VectorXd& av = es.eigenvalues();  // ascending, top is 1 - lambda0
    const double beta_h = av(n - 1) - av(n - 2);   // lambda1 - lambda0
    const double r1 = av(n - 2) / pp.value;
    const double rn = av(0) / pp.value;
    const double chain_gap = 1.0 - std::max(std::abs(r1), std::abs(rn));

    return ConversionResult{
        StochasticMatrix(std::move(p), kValidationTol, kResidualTol),
        ProbabilityDistribution(pp.vector.array().square().matrix(), kValidationTol, 1e-9),
        lambda0, beta_h, chain_gap};
}

Hamiltonian chain_to_hamiltonian(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                                 double lambda0, double tol) {
    if (P.size() != pi.size()) {
        throw InvalidInputError("chain_to_hamiltonian: dimension mismatch");
    }
    if (!(lambda0 < 1.0)) {
        throw InvalidInputError("chain_to_hamiltonian: lambda0 must be < 1, got " +
                                std::to_string(lambda0));
    }
    if (pi.min_weight() <= 0.0) {
        throw InvalidInputError("chain_to_hamiltonian: stationary weights must be strictly "
                                "positive");
    }
    if (!is_reversible(P, pi, tol)) {
        throw InvalidInputError("chain_to_hamiltonian: chain is not reversible with respect to "
                                "pi within " + std::to_string(tol));
    }
    const Eigen::Index n = P.size();
    const Eigen::VectorXd sq = pi.weights().array().sqrt();
    Eigen::MatrixXd s = sq.asDiagonal() * P.entries() * sq.cwiseInverse().asDiagonal();
    s = 0.5 * (s + s.transpose().eval());  // detailed balance makes this exact
    return Hamiltonian(Eigen::MatrixXd::Identity(n, n) - (1.0 - lambda0) * s);
}

std::pair<double, double> lazy_gap_relation(const Hamiltonian& H) {
    const ConversionResult conv = hamiltonian_to_chain(H);
    const Spectrum lazy_spec = reversible_spectrum(lazy(conv.chain), conv.stationary);
    const double lazy_gap = spectral_gap(lazy_spec).gap;
    const double predicted = conv.hamiltonian_gap / (2.0 * (1.0 - conv.ground_energy));
    return {lazy_gap, predicted};
}

}  // namespace adiachain
