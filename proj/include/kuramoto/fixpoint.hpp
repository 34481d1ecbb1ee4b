#ifndef KURAMOTO_FIXPOINT_HPP
#define KURAMOTO_FIXPOINT_HPP

#include "kuramoto/dynamics.hpp"
#include "kuramoto/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuramoto {

/// A phase-locked configuration, grounded so theta[grounded_node] == 0
/// exactly (the global rotation freedom is fixed by pinning one node).
struct FixedPoint {
    std::vector<double> theta;
    double residual_norm = 0.0; // max-norm of the locking residual
    bool homogeneous = false;   // all natural frequencies equal
    int grounded_node = 0;
};

/// Component i: mean(omega) - omega_i - k * sum_j A_ij sin(theta_j - theta_i).
/// Zero exactly at a phase-locked state; with constant omega this is the
/// equal-frequency locking equation up to sign.
std::vector<double> residual(const Network& net, const PhaseState& state);
double residual_max_norm(const Network& net, const PhaseState& state);

enum class SolveStatus { converged, singular_jacobian, no_convergence };

struct NewtonResult {
    SolveStatus status = SolveStatus::no_convergence;
    std::optional<FixedPoint> point; // set iff status == converged
    int iterations = 0;
    double final_residual = 0.0;
};

/// Damped Newton on the reduced system with node 0 pinned at phase 0
/// (n-1 unknowns). The step is halved (up to 30 times) whenever the residual
/// max-norm would increase. Failure is a reported outcome, not an exception.
NewtonResult solve_newton(const Network& net, const PhaseState& guess,
                          double tol = 1e-12, int max_iter = 100);

/// theta_i = 2 pi q i / n: phases wound q times around the circle. n >= 3.
std::vector<double> twisted_state(int n, int q);

/// True iff every pairwise difference, wrapped to (-pi, pi], is below tol —
/// i.e. the configuration is a rotation of the all-equal state.
bool is_zero_fixed_point(const std::vector<double>& theta, double tol);

/// Wrap a configuration into a FixedPoint: rebase so theta[0] = 0, evaluate
/// the residual, and record whether omega is constant.
FixedPoint make_fixed_point(const Network& net, std::vector<double> theta,
                            const std::vector<double>& omega, double k);

/// CSV line "theta_0,...,theta_{n-1}" with exact round trip.
std::string phases_to_csv(const std::vector<double>& theta);

} // namespace kuramoto

#endif
