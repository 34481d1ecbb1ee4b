#ifndef KURAMOTO_EXPERIMENTS_HPP
#define KURAMOTO_EXPERIMENTS_HPP

#include "kuramoto/network.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kuramoto {

/// Outcome of a batch of seeded random-start Newton solves on a complete or
/// near-complete network (homogeneous frequencies). Every converged non-zero
/// fixed point is certified unstable three independent ways: by the
/// linearization spectrum, by an exhaustive non-positive-cut search, and by
/// the centroid singleton cut. Any point that dodges all three lands in
/// `uncertified` — an empty list means no stable non-zero point showed up.
struct SurveyReport {
    int n = 0;
    std::string graph_label;
    double k = 1.0;
    long trials = 0;
    std::uint64_t seed = 0;

    long newton_failures = 0;
    long zero_class = 0; // converged to a rotation of the all-equal state
    long non_zero = 0;
    long unstable_by_spectrum = 0;
    long nonpositive_cut = 0;       // exhaustive search found a cut sum <= 0
    long nonpositive_singleton = 0; // centroid singleton cut sum <= 1e-9

    struct Uncertified {
        long trial = 0;
        std::vector<double> theta;
        bool spectrum_unstable = false;
        bool cut_found = false;
        bool singleton_ok = false;
    };
    std::vector<Uncertified> uncertified;

    bool all_certified() const { return uncertified.empty(); }
};

std::string to_text(const SurveyReport& report);

/// Seeded survey on the complete network over n nodes minus the given
/// non-edges (each node may lose at most one edge, keeping min degree
/// >= n-2). Trial t draws its start from a counter-based stream seeded with
/// seed + t, so reports are identical across runs and schedules. 3 <= n <= 12
/// (every non-zero point gets an exhaustive cut scan).
SurveyReport survey_nonzero_fixed_points(int n, const std::vector<std::pair<int, int>>& non_edges,
                                         long trials, std::uint64_t seed);

/// Smallest r with sum_{i=1..r} i*cos(2 pi i / n) <= 0, and the ratio 2r/n
/// (which approaches ~0.742 for large n).
struct ThresholdRow {
    int n = 0;
    int r = 0;
    double ratio = 0.0; // 2r / n
};

std::string to_text(const ThresholdRow& row);
std::string to_csv(const ThresholdRow& row);

ThresholdRow degree_threshold(int n);

/// Cut cosine sum across a half split of the circulant with offsets 1..r at
/// the singly wound state: nodes 0..n/2-1 against the rest. n even.
double twisted_half_cut(int n, int half_degree);

} // namespace kuramoto

#endif
