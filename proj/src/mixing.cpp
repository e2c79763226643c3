#include "adiachain/mixing.hpp"

#include <cmath>
#include <string>

namespace adiachain {

namespace {

double worst_row_tv(const Eigen::MatrixXd& m, const Eigen::VectorXd& pi) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        worst = std::max(worst, 0.5 * (m.row(i).transpose() - pi).lpNorm<1>());
    }
    return worst;
}

Eigen::VectorXd ungated_stationary(const StochasticMatrix& P) {
    const Eigen::Index n = P.size();
    Eigen::VectorXd pi = stationary_from_balance(P.entries().transpose() -
                                                 Eigen::MatrixXd::Identity(n, n));
    return ProbabilityDistribution(std::move(pi), kValidationTol, 1e-9).weights();
}

}  // namespace

double worst_case_tv(const StochasticMatrix& P, long t, const ProbabilityDistribution& pi) {
    if (t < 0) throw InvalidInputError("worst_case_tv: t must be nonnegative");
    if (pi.size() != P.size()) throw InvalidInputError("worst_case_tv: dimension mismatch");
    const Eigen::Index n = P.size();
    // P^t by binary exponentiation.
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd base = P.entries();
    long e = t;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return worst_row_tv(result, pi.weights());
}

MixingCurve tv_decay_curve(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                           long t_max) {
    if (t_max < 0) throw InvalidInputError("tv_decay_curve: t_max must be nonnegative");
    MixingCurve curve;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(P.size(), P.size());
    for (long t = 0; t <= t_max; ++t) {
        curve.times.push_back(static_cast<double>(t));
        curve.distances.push_back(worst_row_tv(m, pi.weights()));
        if (t < t_max) m = m * P.entries();
    }
    return curve;
}

MixingCurve tv_decay_curve(const Generator& Q, double t_max, double resolution) {
    if (!(t_max >= 0.0) || !(resolution > 0.0)) {
        throw InvalidInputError("tv_decay_curve: t_max must be >= 0 and resolution > 0");
    }
    const Eigen::VectorXd pi = generator_stationary(Q).weights();
    const StochasticMatrix step = transition_matrix(Q, resolution);
    MixingCurve curve;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(Q.size(), Q.size());
    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * resolution;
        if (t > t_max * (1.0 + 1e-12)) break;
        curve.times.push_back(t);
        curve.distances.push_back(worst_row_tv(m, pi));
        m = m * step.entries();
    }
    return curve;
}

long mixing_time(const StochasticMatrix& P, double eps, long cap) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("mixing_time: eps must lie in (0, 1), got " +
                                std::to_string(eps));
    }
    if (cap < 0) throw InvalidInputError("mixing_time: cap must be nonnegative");
    const Eigen::VectorXd pi = ungated_stationary(P);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(P.size(), P.size());
    double d = 0.0;
    for (long t = 0; t <= cap; ++t) {
        d = worst_row_tv(m, pi);
        if (d <= eps) return t;
        if (t < cap) m = m * P.entries();
    }
    throw CapExceededError("mixing_time: worst-case TV distance still " + std::to_string(d) +
                               " > eps at the cap of " + std::to_string(cap) + " steps",
                           d);
}

double mixing_time_continuous(const Generator& Q, double eps, double t_cap, double resolution) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("mixing_time_continuous: eps must lie in (0, 1)");
    }
    if (!(t_cap > 0.0)) throw InvalidInputError("mixing_time_continuous: t_cap must be positive");
    if (resolution == 0.0) resolution = 1e-3 * t_cap;
    if (!(resolution > 0.0 && resolution <= t_cap)) {
        throw InvalidInputError("mixing_time_continuous: resolution must lie in (0, t_cap]");
    }
    const Eigen::VectorXd pi = generator_stationary(Q).weights();
    const StochasticMatrix step = transition_matrix(Q, resolution);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(Q.size(), Q.size());
    double d = 0.0;
    const long k_max = static_cast<long>(std::floor(t_cap / resolution + 1e-9));
    for (long k = 0; k <= k_max; ++k) {
        d = worst_row_tv(m, pi);
        if (d <= eps) return static_cast<double>(k) * resolution;
        if (k < k_max) m = m * step.entries();
    }
    throw CapExceededError("mixing_time_continuous: worst-case TV distance still " +
                               std::to_string(d) + " > eps at the cap t = " +
                               std::to_string(t_cap),
                           d);
}

}  // namespace adiachain
