#ifndef KURAMOTO_STABILITY_HPP
#define KURAMOTO_STABILITY_HPP

#include "kuramoto/dynamics.hpp"
#include "kuramoto/fixpoint.hpp"
#include "kuramoto/linalg.hpp"
#include "kuramoto/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuramoto {

/// Linearization of the coupled-phase flow at theta. Off-diagonal (i,j):
/// k * A_ij cos(theta_j - theta_i); diagonal: minus the row's off-diagonal
/// sum. Exactly symmetric, rows sum to zero, so the constant vector is
/// always a zero mode.
Matrix jacobian(const Network& net, double k, const std::vector<double>& theta);

struct StabilityReport {
    enum class Class { stable, unstable, marginal, degenerate };

    std::vector<double> eigenvalues; // ascending
    int zero_modes = 0;              // eigenvalues in (-tau, tau)
    Class classification = Class::marginal;
    double tau = 0.0;
};

const char* to_string(StabilityReport::Class c);
std::string to_text(const StabilityReport& report);

/// Spectral classification with tau = 1e-8 * k * n. Stable means the single
/// rotational zero mode plus a strictly negative remainder of the spectrum;
/// any eigenvalue above tau means unstable; extra zero modes on a connected
/// graph are reported marginal, and disconnected graphs degenerate.
/// Requires fp.residual_norm < 1e-8.
StabilityReport classify(const Network& net, double k, const FixedPoint& fp);

/// |A| * mean(omega) - sum_{i in A} omega_i
///   - k * sum over cut links (i in A, j outside) of sin(theta_j* - theta_i*).
/// Vanishes at every phase-locked state for every node subset; exposed so the
/// identity can be checked directly.
double partition_flow_identity(const Network& net, const PhaseState& state,
                               const FixedPoint& fp, const std::vector<int>& subset_a);

/// A bipartition whose cut cosine sum is non-positive certifies that the
/// fixed point is not stable (positivity over all cuts is necessary for
/// stability). The sum is over the cut links of cos(theta_i* - theta_j*).
struct CutCertificate {
    std::vector<int> subset_a; // sorted, nonempty, proper
    double cut_sum = 0.0;
    bool certifies_instability = false; // cut_sum <= 0
};

std::string to_text(const CutCertificate& certificate);

CutCertificate cut_cosine_sum(const Network& net, const FixedPoint& fp,
                              const std::vector<int>& subset_a);

enum class CutSearchMode { exhaustive, heuristic };

/// Exhaustive mode scans all 2^(n-1) - 1 bipartitions (n <= 20) and returns
/// the minimizing certificate when its sum is <= 0. Heuristic mode seeds with
/// every singleton, then greedy single-node moves from 50 seeded random
/// restarts; finding nothing proves nothing with the heuristic.
std::optional<CutCertificate> find_unstable_cut(const Network& net, const FixedPoint& fp,
                                                CutSearchMode mode);

/// First-order response to the paired perturbation that lifts side A by
/// eps*|B| and lowers side B by eps*|A|: lhs is the exact initial flow
/// deficit |A|*mean(omega) - sum_{i in A} dtheta_i(0), rhs the linearized
/// prediction k*n*eps*(cut cosine sum). Their ratio tends to 1 as eps -> 0
/// when the cut sum is nonzero.
struct PerturbationProbe {
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> ratio; // absent when rhs == 0
};

PerturbationProbe perturbation_probe(const Network& net, const PhaseState& state,
                                     const FixedPoint& fp, const std::vector<int>& subset_a,
                                     double eps);

/// Singleton cut chosen through the phase centroid S = sum_i e^{i theta_i}.
/// If S vanishes every node works; otherwise the node most opposed to S is
/// taken. On networks with min degree >= n-2 this yields a non-positive
/// singleton cut sum at every non-zero fixed point.
struct CentroidCut {
    int node = 0;
    double cut_sum = 0.0;
    double centroid_magnitude = 0.0;
};

CentroidCut centroid_singleton_cut(const Network& net, const FixedPoint& fp);

} // namespace kuramoto

#endif
