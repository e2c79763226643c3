#include "adiachain/adiabatic_continuous.hpp"

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

double pick_lambda(const Generator& a, const Generator& b, double lambda) {
    const double dep = std::max(a.max_departure_rate(), b.max_departure_rate());
    if (lambda == 0.0) return dep > 0.0 ? dep : 1.0;
    if (!(lambda > 0.0) || lambda < dep * (1.0 - 1e-15)) {
        throw InvalidInputError("lambda " + std::to_string(lambda) +
                                " is below the endpoint departure rate " + std::to_string(dep));
    }
    return lambda;
}

long pick_steps(double lambda, double total_time, long steps) {
    if (steps < 0) throw InvalidInputError("steps must be nonnegative");
    if (steps > 0) return steps;
    return std::max<long>(1, static_cast<long>(std::ceil(lambda * total_time / 0.1)));
}

// Full transition matrix of the midpoint-frozen integration over [0, T].
// Each substep truncates at series_tol / steps so the accumulated row-sum
// deficit stays within series_tol.
Eigen::MatrixXd inhomogeneous_transition(const Generator& q_initial, const Generator& q_final,
                                         double total_time, long steps, double lambda,
                                         double series_tol) {
    const Eigen::Index n = q_initial.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    if (total_time == 0.0) return m;
    const double h = total_time / static_cast<double>(steps);
    const double sub_tol = series_tol / static_cast<double>(steps);
    for (long k = 0; k < steps; ++k) {
        const double s_mid = (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
        const Generator frozen = interpolate_generator(q_initial, q_final, s_mid);
        m = m * transition_matrix(frozen, h, lambda, sub_tol).entries();
    }
    return m;
}

}  // namespace

ProbabilityDistribution evolve_inhomogeneous(const ProbabilityDistribution& nu,
                                             const Generator& q_initial,
                                             const Generator& q_final, double total_time,
                                             long steps, double lambda, double series_tol) {
    if (q_initial.size() != q_final.size() || nu.size() != q_initial.size()) {
        throw InvalidInputError("evolve_inhomogeneous: dimension mismatch");
    }
    if (!(total_time >= 0.0) || !std::isfinite(total_time)) {
        throw InvalidInputError("evolve_inhomogeneous: total_time must be nonnegative");
    }
    if (total_time == 0.0) return nu;
    lambda = pick_lambda(q_initial, q_final, lambda);
    steps = pick_steps(lambda, total_time, steps);
    const double h = total_time / static_cast<double>(steps);
    const double sub_tol = series_tol / static_cast<double>(steps);
    Eigen::RowVectorXd row = nu.weights().transpose();
    for (long k = 0; k < steps; ++k) {
        const double s_mid = (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
        const Generator frozen = interpolate_generator(q_initial, q_final, s_mid);
        row = row * transition_matrix(frozen, h, lambda, sub_tol).entries();
    }
    return ProbabilityDistribution(row.transpose(), kValidationTol, 1e-10);
}

ContinuousAdiabaticReport adiabatic_time_continuous(const Generator& q_initial,
                                                    const Generator& q_final, double eps,
                                                    double t_cap, double grid, long steps,
                                                    double lambda, double series_tol) {
    if (q_initial.size() != q_final.size()) {
        throw InvalidInputError("adiabatic_time_continuous: dimension mismatch");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("adiabatic_time_continuous: eps must lie in (0, 1)");
    }
    if (!(grid > 0.0) || !(t_cap >= grid)) {
        throw InvalidInputError("adiabatic_time_continuous: need 0 < grid <= t_cap");
    }
    lambda = pick_lambda(q_initial, q_final, lambda);
    const Eigen::VectorXd pi_f = generator_stationary(q_final).weights();

    ContinuousAdiabaticReport report;
    report.epsilon = eps;
    report.lambda = lambda;
    const long k_max = static_cast<long>(std::floor(t_cap / grid + 1e-9));
    for (long k = 1; k <= k_max; ++k) {
        const double total_time = static_cast<double>(k) * grid;
        const Eigen::MatrixXd m =
            inhomogeneous_transition(q_initial, q_final, total_time,
                                     pick_steps(lambda, total_time, steps), lambda, series_tol);
        const double err = worst_row_tv(m, pi_f);
        report.error_curve.emplace_back(total_time, err);
        if (err <= eps) {
            report.measured_time = total_time;
            return report;
        }
    }
    throw CapExceededError("adiabatic_time_continuous: error still " +
                               std::to_string(report.error_curve.back().second) +
                               " > eps at the cap t = " + std::to_string(t_cap),
                           report.error_curve.back().second, report.error_curve);
}

ContinuousHorizonBound continuous_horizon_bound(const Generator& q_initial,
                                                const Generator& q_final, double eps,
                                                const ContinuousMixingOptions& mixing) {
    if (q_initial.size() != q_final.size()) {
        throw InvalidInputError("continuous_horizon_bound: dimension mismatch");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidInputError("continuous_horizon_bound: eps must lie in (0, 1)");
    }
    double t_cap = mixing.t_cap;
    double resolution = mixing.resolution;
    if (t_cap <= 0.0 || resolution <= 0.0) {
        // Natural timescale from the uniformized jump chain; doubling the
        // rate keeps the jump chain aperiodic.
        const double lambda0 = 2.0 * std::max(q_final.max_departure_rate(), 1e-12);
        const long t_disc = mixing_time(uniformize(q_final, lambda0).jump_chain, eps / 2.0);
        const double scale = static_cast<double>(t_disc + 1) / lambda0;
        if (resolution <= 0.0) resolution = scale / 256.0;
        if (t_cap <= 0.0) t_cap = 64.0 * scale;
    }
    const double t_half = mixing_time_continuous(q_final, eps / 2.0, t_cap, resolution);
    if (t_half <= 0.0) {
        // Only a one-state space mixes at time zero; the bound degenerates.
        return ContinuousHorizonBound{
            std::max({q_initial.max_departure_rate(), q_final.max_departure_rate(), 1.0}),
            0.0, 0.0};
    }
    const double lambda = std::max({q_initial.max_departure_rate(),
                                    q_final.max_departure_rate(),
                                    eps / (2.0 * t_half) + 1.0});
    const double t_bound = lambda * t_half * t_half / eps;
    // The bound also requires K >= lambda / (2 (lambda - 1)) at
    // K = lambda t_half / eps; the lambda choice above guarantees it.
    const double k_star = lambda * t_half / eps;
    if (k_star < lambda / (2.0 * (lambda - 1.0)) - 1e-9) {
        throw NumericalError("continuous_horizon_bound: internal consistency check on K "
                             "failed", k_star);
    }
    return ContinuousHorizonBound{lambda, t_bound, t_half};
}

ContinuousAdiabaticReport continuous_experiment(const Generator& q_initial,
                                                const Generator& q_final, double eps,
                                                const ContinuousExperimentOptions& opts) {
    const ContinuousHorizonBound bound =
        continuous_horizon_bound(q_initial, q_final, eps, opts.mixing);
    double grid = opts.grid;
    if (grid <= 0.0) {
        grid = bound.t_bound > 0.0 ? bound.t_bound / 200.0 : 1.0;
    }
    double t_cap = opts.t_cap;
    if (t_cap <= 0.0) {
        t_cap = bound.t_bound > 0.0
                    ? std::ceil(bound.t_bound / grid - 1e-9) * grid
                    : grid;
    }
    const double lambda_sim = std::max(opts.lambda, bound.lambda);
    ContinuousAdiabaticReport report = adiabatic_time_continuous(
        q_initial, q_final, eps, t_cap, grid, opts.steps, lambda_sim, opts.series_tol);
    report.t_mix_half = bound.t_mix_half;
    report.lambda = bound.lambda;
    report.theoretical_bound = bound.t_bound;
    return report;
}

}  // namespace adiachain
