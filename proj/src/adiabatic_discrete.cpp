#include "adiachain/adiabatic_discrete.hpp"

#include <cmath>
#include <string>

#include "adiachain/mixing.hpp"

namespace adiachain {

namespace {

double worst_row_tv(const Eigen::MatrixXd& m, const Eigen::VectorXd& pi) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        worst = std::max(worst, 0.5 * (m.row(i).transpose() - pi).lpNorm<1>());
    }
    return worst;
}

// Worst-case error of the horizon-T evolution, evolving all point masses at
// once as a matrix product. Inputs are pre-validated by the caller.
double schedule_error(const Eigen::MatrixXd& p_init, const Eigen::MatrixXd& p_final, long horizon,
                      const Eigen::VectorXd& pi_f) {
    const Eigen::Index n = p_init.rows();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (long k = 1; k <= horizon; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(horizon);
        m = m * ((1.0 - s) * p_init + s * p_final);
    }
    return worst_row_tv(m, pi_f);
}

}  // namespace

AdiabaticSchedule::AdiabaticSchedule(StochasticMatrix p_initial, StochasticMatrix p_final,
                                     long horizon)
    : p_initial_(std::move(p_initial)), p_final_(std::move(p_final)), horizon_(horizon) {
    if (p_initial_.size() != p_final_.size()) {
        throw InvalidInputError("adiabatic schedule: matrices must share dimensions");
    }
    if (horizon_ < 1) {
        throw InvalidInputError("adiabatic schedule: horizon must be >= 1");
    }
    // The final chain must be irreducible and aperiodic wherever a stationary
    // target is needed; that is checked in adiabatic_error and
    // adiabatic_time, so interpolation alone works on any pair.
}

StochasticMatrix interpolate(const AdiabaticSchedule& sched, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw InvalidInputError("interpolate: s must lie in [0, 1], got " + std::to_string(s));
    }
    return StochasticMatrix((1.0 - s) * sched.p_initial().entries() +
                            s * sched.p_final().entries());
}

ProbabilityDistribution adiabatic_evolve(const ProbabilityDistribution& nu,
                                         const AdiabaticSchedule& sched) {
    if (nu.size() != sched.p_initial().size()) {
        throw InvalidInputError("adiabatic_evolve: dimension mismatch");
    }
    const long horizon = sched.horizon();
    Eigen::RowVectorXd row = nu.weights().transpose();
    for (long k = 1; k <= horizon; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(horizon);
        row = row * ((1.0 - s) * sched.p_initial().entries() + s * sched.p_final().entries());
    }
    return ProbabilityDistribution(row.transpose(), kValidationTol, 1e-10);
}

double adiabatic_error(const AdiabaticSchedule& sched) {
    const Eigen::VectorXd pi_f = stationary_distribution(sched.p_final()).weights();
    return schedule_error(sched.p_initial().entries(), sched.p_final().entries(),
                          sched.horizon(), pi_f);
}

DiscreteAdiabaticReport adiabatic_time(const StochasticMatrix& p_initial,
                                       const StochasticMatrix& p_final, double eps, long cap) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("adiabatic_time: eps must lie in (0, 1), got " +
                                std::to_string(eps));
    }
    if (cap < 1) throw InvalidInputError("adiabatic_time: cap must be >= 1");
    if (p_initial.size() != p_final.size()) {
        throw InvalidInputError("adiabatic_time: matrices must share dimensions");
    }
    if (!is_irreducible_aperiodic(p_final.entries())) {
        throw StructureError("adiabatic_time: final chain must be irreducible and aperiodic");
    }
    const Eigen::VectorXd pi_f = stationary_distribution(p_final).weights();

    DiscreteAdiabaticReport report;
    report.epsilon = eps;
    for (long horizon = 1; horizon <= cap; ++horizon) {
        const double err = schedule_error(p_initial.entries(), p_final.entries(), horizon, pi_f);
        report.error_curve.emplace_back(horizon, err);
        if (err <= eps) {
            report.measured_time = horizon;
            return report;
        }
    }
    std::vector<std::pair<double, double>> curve;
    curve.reserve(report.error_curve.size());
    for (const auto& [t, e] : report.error_curve) curve.emplace_back(static_cast<double>(t), e);
    throw CapExceededError("adiabatic_time: error still " +
                               std::to_string(report.error_curve.back().second) +
                               " > eps at the cap of " + std::to_string(cap),
                           report.error_curve.back().second, std::move(curve));
}

HorizonBound horizon_bound(long t_mix_half, double eps) {
    if (t_mix_half < 1) {
        throw InvalidInputError("horizon_bound: t_mix_half must be >= 1");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("horizon_bound: eps must lie in (0, 1)");
    }
    const double approx = static_cast<double>(t_mix_half) / (-2.0 * std::log1p(-eps / 2.0));
    const long k_cap = static_cast<long>(10.0 * approx) + 100;
    for (long k = 2; k <= k_cap; ++k) {
        const double m = static_cast<double>(k - 1);
        const double base = std::pow(1.0 + 1.0 / m, m) / std::exp(1.0);
        const double residual = 1.0 - std::pow(base, static_cast<double>(t_mix_half));
        if (residual <= eps / 2.0) {
            return HorizonBound{k, k * t_mix_half, approx};
        }
    }
    throw NumericalError("horizon_bound: integer search failed to satisfy the inequality",
                         static_cast<double>(k_cap));
}

double spectral_gap_bound(double beta, double pi_min, double eps) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw InvalidInputError("spectral_gap_bound: beta must lie in (0, 1]");
    }
    if (!(pi_min > 0.0 && pi_min < 1.0)) {
        throw InvalidInputError("spectral_gap_bound: pi_min must lie in (0, 1)");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("spectral_gap_bound: eps must lie in (0, 1)");
    }
    return (std::log(2.0 / eps) + std::log(1.0 / pi_min)) / (eps * beta * beta);
}

DiscreteAdiabaticReport discrete_experiment(const StochasticMatrix& p_initial,
                                            const StochasticMatrix& p_final, double eps,
                                            long cap, long mixing_cap) {
    // t_mix can be 0 only for degenerate one-state chains; the bound needs >= 1.
    const long t_half = std::max<long>(1, mixing_time(p_final, eps / 2.0, mixing_cap));
    const HorizonBound tb = horizon_bound(t_half, eps);
    if (cap <= 0) cap = tb.t_bound;
    DiscreteAdiabaticReport report = adiabatic_time(p_initial, p_final, eps, cap);
    report.t_mix_half = t_half;
    report.bound_k = tb.k;
    report.theoretical_bound = tb.t_bound;
    report.approx_k = tb.approx_k;
    return report;
}

}  // namespace adiachain
