#ifndef KURAMOTO_DYNAMICS_HPP
#define KURAMOTO_DYNAMICS_HPP

#include "kuramoto/network.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace kuramoto {

struct FixedPoint; // fixpoint.hpp

/// Phases, natural frequencies and coupling constant of one oscillator
/// system. Phases are kept unwrapped; sin/cos absorb periodicity.
struct PhaseState {
    std::vector<double> theta; // radians
    std::vector<double> omega; // rad / time
    double k = 1.0;            // coupling, > 0
};

/// d theta_i / dt = omega_i + k * sum_j A_ij sin(theta_j - theta_i).
/// Edge-paired evaluation, so the node mean of the result equals the mean
/// natural frequency to rounding.
std::vector<double> kuramoto_rhs(const Network& net, const PhaseState& state);

double mean_frequency(const std::vector<double>& omega);

struct TrajectorySample {
    double t = 0.0;
    std::vector<double> theta;
};

struct Trajectory {
    std::vector<TrajectorySample> samples; // starts at t = 0, ends at the final step
    const TrajectorySample& final_sample() const { return samples.back(); }
};

/// Classical fixed-step RK4. Records the initial state, every record_every-th
/// step and the final step. Deterministic for fixed inputs.
Trajectory integrate_rk4(const Network& net, const PhaseState& state, double h,
                         long steps, long record_every = 1);

/// Recommended step size: 0.01 / (k * max degree).
double default_step(const Network& net, double k);

/// CSV lines "t,theta_0,...,theta_{n-1}".
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

struct MonotonicityReport {
    std::vector<bool> monotone;                     // per node
    std::vector<std::optional<double>> fitted_rate; // decay exponent, present when fitted
    bool converged = false;                         // final deviation < 1e-8
    double final_distance = 0.0;                    // max-norm of final deviation
};

/// Integrates the homogeneous system (omega = 0) from fp.theta + delta and
/// checks, per node, whether theta_i(t) - theta_i* moves monotonically after
/// the first 5% of samples (sign violations below 1e-12 are ignored). Where a
/// node is monotone and decaying, fits |deviation| ~ C exp(-rate t) by least
/// squares on the log. delta must sum to zero within 1e-12.
MonotonicityReport monotonicity_probe(const Network& net, double k, const FixedPoint& fp,
                                      const std::vector<double>& delta, double h, long steps);

} // namespace kuramoto

#endif
