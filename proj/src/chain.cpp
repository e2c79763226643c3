#include "adiachain/chain.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace adiachain {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string at_index(Eigen::Index i) { return " at index " + std::to_string(i); }

std::string at_index(Eigen::Index i, Eigen::Index j) {
    return " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// Validates one weight row in place: rejects non-finite entries and real
// negatives, clamps roundoff negatives in (-tol, 0) to zero, checks the
// pre-clamp sum against 1, and renormalizes only when clamping moved mass.
void validate_row(Eigen::Ref<Eigen::VectorXd> w, double tol, double sum_tol,
                  const std::string& what, Eigen::Index row) {
    const double pre_sum = w.sum();
    if (!std::isfinite(pre_sum)) {
        for (Eigen::Index j = 0; j < w.size(); ++j) {
            if (!std::isfinite(w(j))) {
                throw InvalidInputError(what + ": non-finite entry" +
                                        (row < 0 ? at_index(j) : at_index(row, j)));
            }
        }
    }
    bool clamped = false;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        if (w(j) < 0.0) {
            if (w(j) <= -tol) {
                throw InvalidInputError(what + ": negative entry " + num(w(j)) +
                                        (row < 0 ? at_index(j) : at_index(row, j)));
            }
            w(j) = 0.0;
            clamped = true;
        }
    }
    if (std::abs(pre_sum - 1.0) > sum_tol) {
        throw InvalidInputError(what + ": weights sum to " + num(pre_sum) +
                                (row < 0 ? std::string() : " in row " + std::to_string(row)) +
                                ", expected 1 within " + num(sum_tol));
    }
    if (clamped) w /= w.sum();
}

// Square boolean matrix stored as 64-bit row bitsets; used for the
// reachability and primitivity checks.
class BitMatrix {
public:
    explicit BitMatrix(Eigen::Index n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    static BitMatrix positivity(const Eigen::MatrixXd& m) {
        BitMatrix b(m.rows());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (m(i, j) > 0.0) b.set(i, j);
        return b;
    }

    void set(Eigen::Index i, Eigen::Index j) {
        bits_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    void set_diagonal() {
        for (Eigen::Index i = 0; i < n_; ++i) set(i, i);
    }

    bool all_ones() const {
        for (Eigen::Index i = 0; i < n_; ++i) {
            const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_];
            for (Eigen::Index w = 0; w < words_; ++w) {
                std::uint64_t expect = ~std::uint64_t{0};
                if (w == words_ - 1 && n_ % 64 != 0) expect = (std::uint64_t{1} << (n_ % 64)) - 1;
                if (row[w] != expect) return false;
            }
        }
        return true;
    }

    BitMatrix square() const {
        BitMatrix out(n_);
        for (Eigen::Index i = 0; i < n_; ++i) {
            const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_];
            std::uint64_t* dst = &out.bits_[static_cast<std::size_t>(i) * words_];
            for (Eigen::Index k = 0; k < n_; ++k) {
                if (row[k / 64] >> (k % 64) & 1) {
                    const std::uint64_t* src = &bits_[static_cast<std::size_t>(k) * words_];
                    for (Eigen::Index w = 0; w < words_; ++w) dst[w] |= src[w];
                }
            }
        }
        return out;
    }

private:
    Eigen::Index n_;
    Eigen::Index words_;
    std::vector<std::uint64_t> bits_;
};

void check_square_nonnegative(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InvalidInputError(std::string(what) + ": matrix must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j)))
                throw InvalidInputError(std::string(what) + ": non-finite entry" + at_index(i, j));
            if (m(i, j) < 0.0)
                throw InvalidInputError(std::string(what) + ": negative entry" + at_index(i, j));
        }
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(Eigen::VectorXd weights, double tol,
                                                 double sum_tol)
    : weights_(std::move(weights)) {
    if (weights_.size() == 0) throw InvalidInputError("distribution: empty weight vector");
    if (sum_tol <= 0.0) sum_tol = tol;
    validate_row(weights_, tol, sum_tol, "distribution", -1);
}

ProbabilityDistribution ProbabilityDistribution::point_mass(Eigen::Index n, Eigen::Index x) {
    if (x < 0 || x >= n) throw InvalidInputError("point_mass: state out of range");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    w(x) = 1.0;
    return ProbabilityDistribution(std::move(w));
}

ProbabilityDistribution ProbabilityDistribution::uniform(Eigen::Index n) {
    return ProbabilityDistribution(Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)),
                                   kValidationTol, 1e-9);
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd entries, double tol, double sum_tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw InvalidInputError("stochastic matrix: must be square and non-empty");
    }
    if (entries_.rows() > kMaxStates) {
        throw InvalidInputError("stochastic matrix: dimension exceeds the dense pipeline limit");
    }
    if (sum_tol <= 0.0) sum_tol = tol;
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        Eigen::VectorXd row = entries_.row(i);
        validate_row(row, tol, sum_tol, "stochastic matrix", i);
        entries_.row(i) = row;
    }
}

StochasticMatrix StochasticMatrix::identity(Eigen::Index n) {
    return StochasticMatrix(Eigen::MatrixXd::Identity(n, n));
}

double tv_distance(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) {
    if (mu.size() != nu.size()) {
        throw InvalidInputError("tv_distance: dimension mismatch (" + std::to_string(mu.size()) +
                                " vs " + std::to_string(nu.size()) + ")");
    }
    return 0.5 * (mu - nu).lpNorm<1>();
}

double tv_distance(const ProbabilityDistribution& mu, const ProbabilityDistribution& nu) {
    return tv_distance(mu.weights(), nu.weights());
}

Eigen::VectorXd stationary_from_balance(const Eigen::MatrixXd& balance) {
    const Eigen::Index n = balance.rows();
    Eigen::MatrixXd a(n + 1, n);
    a.topRows(n) = balance;
    a.row(n).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
    b(n) = 1.0;
    Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);
    // Repair solver noise; genuinely negative components are the caller's
    // problem and will fail distribution validation.
    for (Eigen::Index i = 0; i < n; ++i)
        if (pi(i) < 0.0 && pi(i) > -kValidationTol) pi(i) = 0.0;
    const double s = pi.sum();
    if (s > 0.0) pi /= s;
    return pi;
}

ProbabilityDistribution stationary_distribution(const StochasticMatrix& P, double tol) {
    const Eigen::MatrixXd& m = P.entries();
    if (!is_irreducible(m)) {
        throw StructureError("stationary_distribution: chain is reducible "
                             "(positivity pattern is not strongly connected)");
    }
    if (!is_irreducible_aperiodic(m)) {
        throw StructureError("stationary_distribution: chain is periodic "
                             "(no power of the pattern is entrywise positive)");
    }
    const Eigen::Index n = P.size();
    Eigen::VectorXd pi = stationary_from_balance(m.transpose() -
                                                 Eigen::MatrixXd::Identity(n, n));
    ProbabilityDistribution out(pi, tol, 1e-9);
    const double residual = (out.weights().transpose() * m - out.weights().transpose())
                                .cwiseAbs()
                                .maxCoeff();
    if (residual > kResidualTol) {
        throw NumericalError("stationary_distribution: fixed-point residual out of tolerance",
                             residual);
    }
    return out;
}

bool is_reversible(const StochasticMatrix& P, const ProbabilityDistribution& pi, double tol) {
    if (P.size() != pi.size()) {
        throw InvalidInputError("is_reversible: dimension mismatch");
    }
    const Eigen::MatrixXd& m = P.entries();
    for (Eigen::Index i = 0; i < P.size(); ++i)
        for (Eigen::Index j = i + 1; j < P.size(); ++j)
            if (std::abs(pi(i) * m(i, j) - pi(j) * m(j, i)) > tol) return false;
    return true;
}

bool is_irreducible(const Eigen::MatrixXd& M) {
    check_square_nonnegative(M, "is_irreducible");
    const Eigen::Index n = M.rows();
    // (I | B)^(n-1) is all-ones iff the pattern is strongly connected.
    BitMatrix b = BitMatrix::positivity(M);
    b.set_diagonal();
    Eigen::Index k = 1;
    while (true) {
        if (b.all_ones()) return true;
        if (k >= n - 1) return false;
        b = b.square();
        k *= 2;
    }
}

bool is_irreducible_aperiodic(const Eigen::MatrixXd& M) {
    check_square_nonnegative(M, "is_irreducible_aperiodic");
    const Eigen::Index n = M.rows();
    const long long wielandt = static_cast<long long>(n - 1) * (n - 1) + 1;
    // Once some power is entrywise positive all larger powers are, so
    // squaring the pattern up to the Wielandt exponent decides primitivity.
    BitMatrix b = BitMatrix::positivity(M);
    long long k = 1;
    while (true) {
        if (b.all_ones()) return true;
        if (k >= wielandt) return false;
        b = b.square();
        k *= 2;
    }
}

StochasticMatrix lazy(const StochasticMatrix& P) {
    const Eigen::Index n = P.size();
    return StochasticMatrix(0.5 * (Eigen::MatrixXd::Identity(n, n) + P.entries()));
}

}  // namespace adiachain
