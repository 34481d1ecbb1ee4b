#include "kuramoto/stability.hpp"

#include "kuramoto/rng.hpp"
#include "kuramoto/text.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kuramoto {

namespace {

struct Subset {
    std::vector<int> nodes;  // sorted, unique
    std::vector<char> in_a;  // size n
    int count = 0;
};

Subset validate_subset(int n, const std::vector<int>& subset_a) {
    Subset s;
    s.nodes = subset_a;
    std::sort(s.nodes.begin(), s.nodes.end());
    s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
    s.in_a.assign(n, 0);
    for (int v : s.nodes) {
        if (v < 0 || v >= n) throw std::invalid_argument("subset: node id out of range");
        s.in_a[v] = 1;
    }
    s.count = static_cast<int>(s.nodes.size());
    if (s.count == 0 || s.count == n)
        throw std::invalid_argument("subset: must be a nonempty proper node subset");
    return s;
}

double cut_sum_over(const Network& net, const std::vector<double>& theta,
                    const std::vector<char>& in_a) {
    double sum = 0.0;
    for (auto [i, j] : net.edges())
        if (in_a[i] != in_a[j]) sum += std::cos(theta[i] - theta[j]);
    return sum;
}

std::vector<int> nodes_of(const std::vector<char>& in_a) {
    std::vector<int> nodes;
    for (int i = 0; i < static_cast<int>(in_a.size()); ++i)
        if (in_a[i]) nodes.push_back(i);
    return nodes;
}

CutCertificate make_certificate(const Network& net, const std::vector<double>& theta,
                                const std::vector<char>& in_a) {
    CutCertificate cert;
    cert.subset_a = nodes_of(in_a);
    cert.cut_sum = cut_sum_over(net, theta, in_a);
    cert.certifies_instability = cert.cut_sum <= 0.0;
    return cert;
}

void check_fixed_point(const Network& net, const FixedPoint& fp, const char* where) {
    if (static_cast<int>(fp.theta.size()) != net.size())
        throw std::invalid_argument(std::string(where) + ": fixed point does not match network");
}

/// Greedy descent: repeatedly flip the single node that lowers the cut sum
/// the most. Strict decrease over a finite state space terminates; the move
/// cap only guards against ulp-scale rounding ties.
void greedy_improve(const Network& net, const std::vector<double>& edge_cos,
                    std::vector<char>& in_a, int& count, double& sum) {
    const int n = net.size();
    for (int move = 0; move < 10000; ++move) {
        int best_node = -1;
        double best_delta = 0.0;
        for (int v = 0; v < n; ++v) {
            int new_count = count + (in_a[v] ? -1 : 1);
            if (new_count == 0 || new_count == n) continue;
            double delta = 0.0;
            for (std::size_t e = 0; e < net.edges().size(); ++e) {
                auto [i, j] = net.edges()[e];
                if (i != v && j != v) continue;
                bool crossing = in_a[i] != in_a[j];
                delta += crossing ? -edge_cos[e] : edge_cos[e];
            }
            if (delta < best_delta) {
                best_delta = delta;
                best_node = v;
            }
        }
        if (best_node < 0) return;
        in_a[best_node] = in_a[best_node] ? 0 : 1;
        count += in_a[best_node] ? 1 : -1;
        sum += best_delta;
    }
}

} // namespace

Matrix jacobian(const Network& net, double k, const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != net.size())
        throw std::invalid_argument("jacobian: dimensions do not match network");
    const int n = net.size();
    Matrix j(n, n, 0.0);
    for (auto [a, b] : net.edges()) {
        double c = k * std::cos(theta[b] - theta[a]);
        j(a, b) = c;
        j(b, a) = c;
    }
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int col = 0; col < n; ++col)
            if (col != i) row += j(i, col);
        j(i, i) = -row;
    }
    return j;
}

const char* to_string(StabilityReport::Class c) {
    switch (c) {
        case StabilityReport::Class::stable: return "stable";
        case StabilityReport::Class::unstable: return "unstable";
        case StabilityReport::Class::marginal: return "marginal";
        case StabilityReport::Class::degenerate: return "degenerate";
    }
    return "?";
}

std::string to_text(const StabilityReport& report) {
    std::string out;
    out += "classification: ";
    out += to_string(report.classification);
    out += "\nzero_modes: " + std::to_string(report.zero_modes);
    out += "\ntau: " + fmt_g(report.tau);
    out += "\neigenvalues: " + join_csv(report.eigenvalues, 12);
    out += '\n';
    return out;
}

StabilityReport classify(const Network& net, double k, const FixedPoint& fp) {
    check_fixed_point(net, fp, "classify");
    if (!(k > 0.0)) throw std::invalid_argument("classify: coupling must be positive");
    if (!(fp.residual_norm < 1e-8))
        throw std::invalid_argument("classify: fixed point residual too large");

    StabilityReport report;
    report.tau = 1e-8 * k * net.size();
    report.eigenvalues = eigenvalues_symmetric(jacobian(net, k, fp.theta));

    bool has_positive = false;
    for (double ev : report.eigenvalues) {
        if (ev > report.tau) has_positive = true;
        if (std::abs(ev) < report.tau) ++report.zero_modes;
    }

    if (has_positive)
        report.classification = StabilityReport::Class::unstable;
    else if (!net.connected())
        report.classification = StabilityReport::Class::degenerate;
    else if (report.zero_modes == 1)
        report.classification = StabilityReport::Class::stable;
    else
        report.classification = StabilityReport::Class::marginal;
    return report;
}

double partition_flow_identity(const Network& net, const PhaseState& state,
                               const FixedPoint& fp, const std::vector<int>& subset_a) {
    check_fixed_point(net, fp, "partition_flow_identity");
    if (static_cast<int>(state.omega.size()) != net.size())
        throw std::invalid_argument("partition_flow_identity: omega does not match network");
    if (!(state.k > 0.0))
        throw std::invalid_argument("partition_flow_identity: coupling must be positive");
    if (!(fp.residual_norm < 1e-8))
        throw std::invalid_argument("partition_flow_identity: fixed point residual too large");
    Subset a = validate_subset(net.size(), subset_a);

    double wbar = mean_frequency(state.omega);
    double omega_a = 0.0;
    for (int v : a.nodes) omega_a += state.omega[v];

    double cut_sin = 0.0;
    for (auto [i, j] : net.edges()) {
        if (a.in_a[i] == a.in_a[j]) continue;
        // orient the link from the A side outward
        int inside = a.in_a[i] ? i : j;
        int outside = a.in_a[i] ? j : i;
        cut_sin += std::sin(fp.theta[outside] - fp.theta[inside]);
    }
    return a.count * wbar - omega_a - state.k * cut_sin;
}

std::string to_text(const CutCertificate& certificate) {
    std::string out = "cut_subset: ";
    for (std::size_t i = 0; i < certificate.subset_a.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(certificate.subset_a[i]);
    }
    out += "\ncut_sum: " + fmt_g(certificate.cut_sum);
    out += "\ncertifies_instability: ";
    out += certificate.certifies_instability ? "true" : "false";
    out += '\n';
    return out;
}

CutCertificate cut_cosine_sum(const Network& net, const FixedPoint& fp,
                              const std::vector<int>& subset_a) {
    check_fixed_point(net, fp, "cut_cosine_sum");
    Subset a = validate_subset(net.size(), subset_a);
    return make_certificate(net, fp.theta, a.in_a);
}

std::optional<CutCertificate> find_unstable_cut(const Network& net, const FixedPoint& fp,
                                                CutSearchMode mode) {
    check_fixed_point(net, fp, "find_unstable_cut");
    const int n = net.size();
    if (n < 2) throw std::invalid_argument("find_unstable_cut: need at least two nodes");

    std::vector<double> edge_cos(net.edges().size());
    for (std::size_t e = 0; e < net.edges().size(); ++e) {
        auto [i, j] = net.edges()[e];
        edge_cos[e] = std::cos(fp.theta[i] - fp.theta[j]);
    }
    auto eval = [&](const std::vector<char>& in_a) {
        double sum = 0.0;
        for (std::size_t e = 0; e < net.edges().size(); ++e) {
            auto [i, j] = net.edges()[e];
            if (in_a[i] != in_a[j]) sum += edge_cos[e];
        }
        return sum;
    };

    std::vector<char> best_in_a;
    double best_sum = 0.0;
    bool have_best = false;
    auto consider = [&](const std::vector<char>& in_a, double sum) {
        if (!have_best || sum < best_sum) {
            best_in_a = in_a;
            best_sum = sum;
            have_best = true;
        }
    };

    if (mode == CutSearchMode::exhaustive) {
        if (n > 20) throw std::invalid_argument("find_unstable_cut: exhaustive mode capped at n = 20");
        // each bipartition once: node 0 always on the B side
        std::vector<char> in_a(n, 0);
        const std::uint32_t limit = 1u << (n - 1);
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
            for (int v = 1; v < n; ++v) in_a[v] = (mask >> (v - 1)) & 1u;
            consider(in_a, eval(in_a));
        }
    } else {
        std::vector<char> in_a(n, 0);
        for (int v = 0; v < n; ++v) {
            std::fill(in_a.begin(), in_a.end(), 0);
            in_a[v] = 1;
            consider(in_a, eval(in_a));
        }
        {
            std::vector<char> work = best_in_a;
            int count = 0;
            for (char c : work) count += c;
            double sum = best_sum;
            greedy_improve(net, edge_cos, work, count, sum);
            consider(work, eval(work));
        }
        SplitMix64 rng(0x6b7572616d6f746full); // fixed seed: search is deterministic
        for (int restart = 0; restart < 50; ++restart) {
            std::vector<char> work(n, 0);
            int count = 0;
            do {
                count = 0;
                for (int v = 0; v < n; ++v) {
                    work[v] = rng.next() & 1u;
                    count += work[v];
                }
            } while (count == 0 || count == n);
            double sum = eval(work);
            greedy_improve(net, edge_cos, work, count, sum);
            consider(work, eval(work));
        }
    }

    if (!have_best || best_sum > 0.0) return std::nullopt;
    return make_certificate(net, fp.theta, best_in_a);
}

PerturbationProbe perturbation_probe(const Network& net, const PhaseState& state,
                                     const FixedPoint& fp, const std::vector<int>& subset_a,
                                     double eps) {
    check_fixed_point(net, fp, "perturbation_probe");
    if (static_cast<int>(state.omega.size()) != net.size())
        throw std::invalid_argument("perturbation_probe: omega does not match network");
    if (eps < 0.0) throw std::invalid_argument("perturbation_probe: eps must be non-negative");
    Subset a = validate_subset(net.size(), subset_a);

    const int n = net.size();
    const int size_a = a.count;
    const int size_b = n - size_a;

    // lift side A, lower side B; the shift keeps the phase mean unchanged
    std::vector<double> perturbed(n);
    for (int i = 0; i < n; ++i)
        perturbed[i] = fp.theta[i] + (a.in_a[i] ? eps * size_b : -eps * size_a);

    std::vector<double> rate = kuramoto_rhs(net, {perturbed, state.omega, state.k});
    double wbar = mean_frequency(state.omega);
    double flow_a = 0.0;
    for (int v : a.nodes) flow_a += rate[v];

    PerturbationProbe probe;
    probe.lhs = size_a * wbar - flow_a;
    probe.rhs = state.k * n * eps * cut_sum_over(net, fp.theta, a.in_a);
    if (probe.rhs != 0.0) probe.ratio = probe.lhs / probe.rhs;
    return probe;
}

CentroidCut centroid_singleton_cut(const Network& net, const FixedPoint& fp) {
    check_fixed_point(net, fp, "centroid_singleton_cut");
    const int n = net.size();
    if (n < 2) throw std::invalid_argument("centroid_singleton_cut: need at least two nodes");
    if (net.min_degree() < n - 2)
        throw std::invalid_argument("centroid_singleton_cut: requires min degree >= n-2");

    double sx = 0.0, sy = 0.0;
    for (double th : fp.theta) {
        sx += std::cos(th);
        sy += std::sin(th);
    }
    double magnitude = std::hypot(sx, sy);

    std::vector<char> in_a(n, 0);
    auto singleton_sum = [&](int m) {
        std::fill(in_a.begin(), in_a.end(), 0);
        in_a[m] = 1;
        return cut_sum_over(net, fp.theta, in_a);
    };

    int node = 0;
    if (magnitude < 1e-9) {
        // centroid at the origin: every singleton qualifies, take the smallest sum
        double best = singleton_sum(0);
        for (int m = 1; m < n; ++m) {
            double s = singleton_sum(m);
            if (s < best) {
                best = s;
                node = m;
            }
        }
    } else {
        // the node most opposed to the centroid direction
        double best = std::cos(fp.theta[0]) * sx + std::sin(fp.theta[0]) * sy;
        for (int m = 1; m < n; ++m) {
            double dot = std::cos(fp.theta[m]) * sx + std::sin(fp.theta[m]) * sy;
            if (dot < best) {
                best = dot;
                node = m;
            }
        }
    }

    CentroidCut cut;
    cut.node = node;
    cut.cut_sum = singleton_sum(node);
    cut.centroid_magnitude = magnitude;
    return cut;
}

} // namespace kuramoto
