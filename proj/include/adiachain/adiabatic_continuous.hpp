#ifndef ADIACHAIN_ADIABATIC_CONTINUOUS_HPP
#define ADIACHAIN_ADIABATIC_CONTINUOUS_HPP

#include <utility>
#include <vector>

#include "adiachain/generator.hpp"

namespace adiachain {

// Result of the continuous adiabatic-time measurement against the bound
// T <= lambda t_mix(eps/2)^2 / eps.
struct ContinuousAdiabaticReport {
    double measured_time = 0.0;                         // least grid T with error <= eps
    double epsilon = 0.0;
    std::vector<std::pair<double, double>> error_curve; // (T, worst-case TV error)
    double t_mix_half = 0.0;                            // continuous t_mix(eps/2) of Q_final
    double lambda = 0.0;                                // the bound's uniformization rate
    double theoretical_bound = 0.0;                     // lambda t_mix(eps/2)^2 / eps
};

// Grid used for the continuous mixing time inside the bound. Zeros derive
// both values from the discrete mixing time of the uniformized jump chain,
// which sets the natural timescale.
struct ContinuousMixingOptions {
    double t_cap = 0.0;
    double resolution = 0.0;
};

// Integrates d nu_t / dt = nu_t Q[t/T] over [0, T] with Q[s] =
// (1-s) Q_initial + s Q_final: the generator is frozen at each substep
// midpoint and applied through the uniformization series, so every substep
// is exactly stochastic and the scheme is second order in the substep size.
// steps = 0 picks the smallest count with lambda T / steps <= 0.1;
// lambda = 0 picks the larger endpoint departure rate, which dominates every
// interpolated generator by convexity.
ProbabilityDistribution evolve_inhomogeneous(const ProbabilityDistribution& nu,
                                             const Generator& q_initial,
                                             const Generator& q_final, double total_time,
                                             long steps = 0, double lambda = 0.0,
                                             double series_tol = kSeriesTol);

// Least T on the grid {grid, 2 grid, ..., t_cap} with
// max_x || delta_x P_T(0, T) - pi_f ||_TV <= eps; the scan is plain
// ascending (the error is not assumed monotone in T) and the whole curve is
// recorded. Throws CapExceededError with the curve attached.
ContinuousAdiabaticReport adiabatic_time_continuous(const Generator& q_initial,
                                                    const Generator& q_final, double eps,
                                                    double t_cap, double grid, long steps = 0,
                                                    double lambda = 0.0,
                                                    double series_tol = kSeriesTol);

struct ContinuousHorizonBound {
    double lambda;      // max(dep(Q_init), dep(Q_final), eps / (2 t_mix(eps/2)) + 1)
    double t_bound;     // lambda t_mix(eps/2)^2 / eps
    double t_mix_half;  // continuous mixing time of Q_final at eps/2
};

ContinuousHorizonBound continuous_horizon_bound(const Generator& q_initial,
                                                const Generator& q_final, double eps,
                                                const ContinuousMixingOptions& mixing = {});

// Full experiment config. Zeros mean: derive the scan grid and cap from the
// theoretical bound (grid = bound/200, cap = bound), share the bound's
// lambda with the integrator, derive the mixing grid automatically.
struct ContinuousExperimentOptions {
    double t_cap = 0.0;
    double grid = 0.0;
    long steps = 0;
    double lambda = 0.0;
    double series_tol = kSeriesTol;
    ContinuousMixingOptions mixing = {};
};

// Bound plus grid-scan measurement in one report.
ContinuousAdiabaticReport continuous_experiment(const Generator& q_initial,
                                                const Generator& q_final, double eps,
                                                const ContinuousExperimentOptions& opts = {});

}  // namespace adiachain

#endif  // ADIACHAIN_ADIABATIC_CONTINUOUS_HPP
