#ifndef ADIACHAIN_MIXING_HPP
#define ADIACHAIN_MIXING_HPP

#include <vector>

#include "adiachain/chain.hpp"
#include "adiachain/generator.hpp"

namespace adiachain {

inline constexpr long kDefaultDiscreteCap = 1'000'000;
inline constexpr double kDefaultContinuousCap = 1'000.0;

// Worst-case total-variation decay d(t) sampled on a time grid.
struct MixingCurve {
    std::vector<double> times;
    std::vector<double> distances;
};

// Worst-case distance to stationarity after t steps,
//   d(t) = max_x || delta_x P^t - pi ||_TV.
// The maximum over all initial distributions equals the maximum over point
// masses: nu -> ||nu P^t - pi||_TV is convex, so the maximum over the
// simplex is attained at a vertex.
double worst_case_tv(const StochasticMatrix& P, long t, const ProbabilityDistribution& pi);

// d(t) for t = 0..t_max (incremental matrix powers).
MixingCurve tv_decay_curve(const StochasticMatrix& P, const ProbabilityDistribution& pi,
                           long t_max);

// d(t) for t = 0, resolution, 2 resolution, ..., <= t_max.
MixingCurve tv_decay_curve(const Generator& Q, double t_max, double resolution);

// Least t with d(t) <= eps, by ascending scan from t = 0; d(t) is
// non-increasing so the first crossing is the answer. Throws
// CapExceededError carrying the last distance when t = cap is passed.
long mixing_time(const StochasticMatrix& P, double eps, long cap = kDefaultDiscreteCap);

// Continuous-time analogue on the grid {0, resolution, 2 resolution, ...}:
// least grid t with max_x ||delta_x P(t) - pi||_TV <= eps, where P(t) comes
// from the uniformization series. Over-estimates the true mixing time by at
// most `resolution`. resolution = 0 picks 1e-3 * t_cap.
double mixing_time_continuous(const Generator& Q, double eps,
                              double t_cap = kDefaultContinuousCap, double resolution = 0.0);

}  // namespace adiachain

#endif  // ADIACHAIN_MIXING_HPP
