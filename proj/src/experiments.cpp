#include "kuramoto/experiments.hpp"

#include "kuramoto/fixpoint.hpp"
#include "kuramoto/rng.hpp"
#include "kuramoto/stability.hpp"
#include "kuramoto/text.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace kuramoto {

namespace {

std::string label_non_edges(const std::vector<std::pair<int, int>>& non_edges) {
    if (non_edges.empty()) return "complete";
    std::string label = "complete minus ";
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
        if (i) label += ',';
        label += std::to_string(non_edges[i].first) + '-' + std::to_string(non_edges[i].second);
    }
    return label;
}

Network near_complete(int n, const std::vector<std::pair<int, int>>& non_edges) {
    std::vector<char> touched(n, 0);
    for (auto [a, b] : non_edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("survey: bad non-edge");
        if (touched[a] || touched[b])
            throw std::invalid_argument("survey: a node may lose at most one edge");
        touched[a] = touched[b] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool removed = false;
            for (auto [a, b] : non_edges)
                if ((a == i && b == j) || (a == j && b == i)) removed = true;
            if (!removed) edges.emplace_back(i, j);
        }
    return Network::from_edges(n, edges);
}

} // namespace

std::string to_text(const SurveyReport& report) {
    std::string out;
    out += "survey: non-zero fixed point certification\n";
    out += "n: " + std::to_string(report.n) + '\n';
    out += "graph: " + report.graph_label + '\n';
    out += "k: " + fmt_g(report.k) + '\n';
    out += "trials: " + std::to_string(report.trials) + '\n';
    out += "seed: " + std::to_string(report.seed) + '\n';
    out += "newton_failures: " + std::to_string(report.newton_failures) + '\n';
    out += "zero_class: " + std::to_string(report.zero_class) + '\n';
    out += "non_zero: " + std::to_string(report.non_zero) + '\n';
    out += "unstable_by_spectrum: " + std::to_string(report.unstable_by_spectrum) + '\n';
    out += "nonpositive_cut: " + std::to_string(report.nonpositive_cut) + '\n';
    out += "nonpositive_singleton: " + std::to_string(report.nonpositive_singleton) + '\n';
    out += "uncertified: " + std::to_string(report.uncertified.size()) + '\n';
    for (const auto& u : report.uncertified) {
        out += "uncertified_point: trial=" + std::to_string(u.trial);
        out += " spectrum_unstable=" + std::string(u.spectrum_unstable ? "true" : "false");
        out += " cut_found=" + std::string(u.cut_found ? "true" : "false");
        out += " singleton_ok=" + std::string(u.singleton_ok ? "true" : "false");
        out += " theta=" + join_csv(u.theta, 12) + '\n';
    }
    out += "all_nonzero_certified: ";
    out += report.all_certified() ? "true" : "false";
    out += '\n';
    return out;
}

SurveyReport survey_nonzero_fixed_points(int n, const std::vector<std::pair<int, int>>& non_edges,
                                         long trials, std::uint64_t seed) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("survey: n must lie in [3, 12] (exhaustive certification)");
    if (trials < 1) throw std::invalid_argument("survey: need at least one trial");

    Network net = near_complete(n, non_edges);

    SurveyReport report;
    report.n = n;
    report.graph_label = label_non_edges(non_edges);
    report.k = 1.0;
    report.trials = trials;
    report.seed = seed;

    const std::vector<double> omega(n, 0.0);
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(trial));
        std::vector<double> guess(n);
        for (int i = 0; i < n; ++i) guess[i] = rng.angle();

        NewtonResult result = solve_newton(net, {guess, omega, report.k});
        if (result.status != SolveStatus::converged) {
            ++report.newton_failures;
            continue;
        }
        const FixedPoint& fp = *result.point;
        if (is_zero_fixed_point(fp.theta, 1e-6)) {
            ++report.zero_class;
            continue;
        }
        ++report.non_zero;

        bool spectrum_unstable =
            classify(net, report.k, fp).classification == StabilityReport::Class::unstable;
        bool cut_found = find_unstable_cut(net, fp, CutSearchMode::exhaustive).has_value();
        bool singleton_ok = centroid_singleton_cut(net, fp).cut_sum <= 1e-9;

        if (spectrum_unstable) ++report.unstable_by_spectrum;
        if (cut_found) ++report.nonpositive_cut;
        if (singleton_ok) ++report.nonpositive_singleton;
        if (!(spectrum_unstable && cut_found && singleton_ok))
            report.uncertified.push_back({trial, fp.theta, spectrum_unstable, cut_found, singleton_ok});
    }
    return report;
}

std::string to_text(const ThresholdRow& row) {
    std::string out;
    out += "n: " + std::to_string(row.n) + '\n';
    out += "r: " + std::to_string(row.r) + '\n';
    out += "ratio_2r_over_n: " + fmt_g(row.ratio) + '\n';
    return out;
}

std::string to_csv(const ThresholdRow& row) {
    return std::to_string(row.n) + ',' + std::to_string(row.r) + ',' + fmt_g(row.ratio);
}

ThresholdRow degree_threshold(int n) {
    if (n < 3) throw std::invalid_argument("degree_threshold: n must be at least 3");
    double sum = 0.0;
    for (int r = 1; r <= n; ++r) {
        sum += static_cast<double>(r) *
               std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
        if (sum <= 0.0) return {n, r, 2.0 * static_cast<double>(r) / static_cast<double>(n)};
    }
    throw std::logic_error("degree_threshold: partial sums stayed positive"); // unreachable
}

double twisted_half_cut(int n, int half_degree) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("twisted_half_cut: n must be even, >= 4");
    if (half_degree < 1 || half_degree > n / 2)
        throw std::invalid_argument("twisted_half_cut: half_degree outside [1, n/2]");

    std::vector<int> offsets(half_degree);
    std::iota(offsets.begin(), offsets.end(), 1);
    Network net = Network::circulant(n, offsets);

    FixedPoint fp = make_fixed_point(net, twisted_state(n, 1), std::vector<double>(n, 0.0), 1.0);
    std::vector<int> half(n / 2);
    std::iota(half.begin(), half.end(), 0);
    return cut_cosine_sum(net, fp, half).cut_sum;
}

} // namespace kuramoto
