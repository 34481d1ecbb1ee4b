#include "kuramoto/dynamics.hpp"

#include "kuramoto/fixpoint.hpp"
#include "kuramoto/text.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kuramoto {

namespace {

void check_state(const Network& net, const PhaseState& state) {
    if (static_cast<int>(state.theta.size()) != net.size() ||
        static_cast<int>(state.omega.size()) != net.size())
        throw std::invalid_argument("phase state dimensions do not match network");
    if (!(state.k > 0.0)) throw std::invalid_argument("coupling constant must be positive");
}

} // namespace

std::vector<double> kuramoto_rhs(const Network& net, const PhaseState& state) {
    check_state(net, state);
    std::vector<double> rate = state.omega;
    for (auto [i, j] : net.edges()) {
        double s = state.k * std::sin(state.theta[j] - state.theta[i]);
        rate[i] += s;
        rate[j] -= s;
    }
    return rate;
}

double mean_frequency(const std::vector<double>& omega) {
    if (omega.empty()) throw std::invalid_argument("mean_frequency: empty vector");
    bool constant = true;
    double sum = 0.0;
    for (double w : omega) {
        sum += w;
        if (w != omega.front()) constant = false;
    }
    if (constant) return omega.front(); // exact: sum/n would round
    return sum / static_cast<double>(omega.size());
}

double default_step(const Network& net, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("coupling constant must be positive");
    int dmax = net.max_degree();
    return 0.01 / (k * (dmax > 0 ? dmax : 1));
}

Trajectory integrate_rk4(const Network& net, const PhaseState& state, double h,
                         long steps, long record_every) {
    check_state(net, state);
    if (!(h > 0.0)) throw std::invalid_argument("integrate_rk4: step size must be positive");
    if (steps < 0) throw std::invalid_argument("integrate_rk4: negative step count");
    if (record_every < 1) throw std::invalid_argument("integrate_rk4: record_every must be >= 1");

    const int n = net.size();
    PhaseState work = state;
    std::vector<double> th = state.theta;
    std::vector<double> stage(n), k1, k2, k3, k4;

    Trajectory traj;
    traj.samples.push_back({0.0, th});

    for (long step = 1; step <= steps; ++step) {
        work.theta = th;
        k1 = kuramoto_rhs(net, work);
        for (int i = 0; i < n; ++i) stage[i] = th[i] + 0.5 * h * k1[i];
        work.theta = stage;
        k2 = kuramoto_rhs(net, work);
        for (int i = 0; i < n; ++i) stage[i] = th[i] + 0.5 * h * k2[i];
        work.theta = stage;
        k3 = kuramoto_rhs(net, work);
        for (int i = 0; i < n; ++i) stage[i] = th[i] + h * k3[i];
        work.theta = stage;
        k4 = kuramoto_rhs(net, work);
        for (int i = 0; i < n; ++i)
            th[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        if (step % record_every == 0 || step == steps)
            traj.samples.push_back({static_cast<double>(step) * h, th});
    }
    return traj;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
    for (const auto& sample : trajectory.samples) {
        out << fmt_g(sample.t, 12);
        for (double v : sample.theta) out << ',' << fmt_g(v, 12);
        out << '\n';
    }
}

MonotonicityReport monotonicity_probe(const Network& net, double k, const FixedPoint& fp,
                                      const std::vector<double>& delta, double h, long steps) {
    const int n = net.size();
    if (static_cast<int>(fp.theta.size()) != n || static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("monotonicity_probe: dimension mismatch");
    if (!(k > 0.0)) throw std::invalid_argument("monotonicity_probe: coupling must be positive");
    if (fp.residual_norm >= 1e-8)
        throw std::invalid_argument("monotonicity_probe: fp is not a fixed point");
    double dsum = 0.0;
    for (double d : delta) dsum += d;
    if (std::abs(dsum) > 1e-12)
        throw std::invalid_argument("monotonicity_probe: perturbation must sum to zero");

    PhaseState start;
    start.theta.resize(n);
    for (int i = 0; i < n; ++i) start.theta[i] = fp.theta[i] + delta[i];
    start.omega.assign(n, 0.0);
    start.k = k;

    Trajectory traj = integrate_rk4(net, start, h, steps, 1);
    const long m = static_cast<long>(traj.samples.size());
    const long first = m / 20; // discard the first 5% as transient

    MonotonicityReport report;
    report.monotone.assign(n, false);
    report.fitted_rate.assign(n, std::nullopt);

    for (int i = 0; i < n; ++i) {
        double max_diff = 0.0, min_diff = 0.0;
        for (long t = first; t + 1 < m; ++t) {
            double a = traj.samples[t].theta[i] - fp.theta[i];
            double b = traj.samples[t + 1].theta[i] - fp.theta[i];
            double d = b - a;
            max_diff = std::max(max_diff, d);
            min_diff = std::min(min_diff, d);
        }
        report.monotone[i] = (max_diff <= 1e-12) || (min_diff >= -1e-12);

        // exponential fit on samples still above the rounding floor
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        long count = 0;
        for (long t = first; t < m; ++t) {
            double dev = std::abs(traj.samples[t].theta[i] - fp.theta[i]);
            if (dev <= 1e-12) continue;
            double x = traj.samples[t].t;
            double y = std::log(dev);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        if (report.monotone[i] && count >= 2) {
            double denom = count * sxx - sx * sx;
            if (denom > 0.0) {
                double slope = (count * sxy - sx * sy) / denom;
                if (slope < 0.0) report.fitted_rate[i] = -slope;
            }
        }
    }

    double final_distance = 0.0;
    for (int i = 0; i < n; ++i)
        final_distance = std::max(final_distance,
                                  std::abs(traj.samples[m - 1].theta[i] - fp.theta[i]));
    report.final_distance = final_distance;
    report.converged = final_distance < 1e-8;
    return report;
}

} // namespace kuramoto
