#ifndef ADIACHAIN_ADIABATIC_DISCRETE_HPP
#define ADIACHAIN_ADIABATIC_DISCRETE_HPP

#include <utility>
#include <vector>

#include "adiachain/chain.hpp"

namespace adiachain {

// Linear interpolation schedule P_s = (1 - s) P_initial + s P_final over a
// discrete horizon T. P_initial is unrestricted; P_final must be irreducible
// and aperiodic.
class AdiabaticSchedule {
public:
    AdiabaticSchedule(StochasticMatrix p_initial, StochasticMatrix p_final, long horizon);

    const StochasticMatrix& p_initial() const { return p_initial_; }
    const StochasticMatrix& p_final() const { return p_final_; }
    long horizon() const { return horizon_; }

private:
    StochasticMatrix p_initial_;
    StochasticMatrix p_final_;
    long horizon_;
};

// Result of the adiabatic-time measurement against the theoretical bound
// T <= K t_mix(eps/2), where K is the least integer with
//   1 - ((1 + 1/(K-1))^{K-1} / e)^{t_mix(eps/2)} <= eps / 2.
struct DiscreteAdiabaticReport {
    long measured_time = 0;                           // least T with error <= eps
    double epsilon = 0.0;
    std::vector<std::pair<long, double>> error_curve; // (T, worst-case TV error)
    long t_mix_half = 0;                              // t_mix(eps/2) of P_final
    long bound_k = 0;                                 // K solving the inequality above
    long theoretical_bound = 0;                       // K * t_mix(eps/2)
    double approx_k = 0.0;                            // t_mix(eps/2) / (-2 log(1 - eps/2))
};

// P_s for s in [0, 1].
StochasticMatrix interpolate(const AdiabaticSchedule& sched, double s);

// nu P_{1/T} P_{2/T} ... P_{(T-1)/T} P_1, exactly T factors.
ProbabilityDistribution adiabatic_evolve(const ProbabilityDistribution& nu,
                                         const AdiabaticSchedule& sched);

// max_nu || nu P_{1/T} ... P_1 - pi_f ||_TV, reduced to point masses.
double adiabatic_error(const AdiabaticSchedule& sched);

// Least T <= cap with adiabatic_error <= eps, found by plain ascending scan;
// the error is not assumed monotone in T and the full curve is recorded.
// Throws CapExceededError with the curve attached.
DiscreteAdiabaticReport adiabatic_time(const StochasticMatrix& p_initial,
                                       const StochasticMatrix& p_final, double eps, long cap);

struct HorizonBound {
    long k;          // least K satisfying the exact inequality
    long t_bound;    // K * t_mix_half
    double approx_k; // closed-form approximation, for reporting
};

// Solves the exact inequality by ascending integer search from K = 2; the
// closed-form approximation t_mix_half / (-2 log(1 - eps/2)) is reported
// alongside.
HorizonBound horizon_bound(long t_mix_half, double eps);

// Spectral-gap form of the adiabatic bound for reversible final chains:
//   (log(2/eps) + log(1/pi_min)) / (eps beta^2),
// with the hidden constant taken as 1. An order-of-magnitude figure for
// reporting only.
double spectral_gap_bound(double beta, double pi_min, double eps);

// Measurement plus bound in one report. cap = 0 uses the theoretical bound
// as the scan cap.
DiscreteAdiabaticReport discrete_experiment(const StochasticMatrix& p_initial,
                                            const StochasticMatrix& p_final, double eps,
                                            long cap = 0, long mixing_cap = 1'000'000);

}  // namespace adiachain

#endif  // ADIACHAIN_ADIABATIC_DISCRETE_HPP
