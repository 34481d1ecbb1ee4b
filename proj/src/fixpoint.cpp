#include "kuramoto/fixpoint.hpp"

#include "kuramoto/linalg.hpp"
#include "kuramoto/stability.hpp"
#include "kuramoto/text.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace kuramoto {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool all_equal(const std::vector<double>& v) {
    for (double x : v)
        if (x != v.front()) return false;
    return true;
}

/// Nearest representative of theta in (-pi, pi], keeping 0 at 0.
std::vector<double> wrap_phases(const std::vector<double>& theta) {
    std::vector<double> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        double v = std::remainder(theta[i], two_pi);
        if (v <= -std::numbers::pi) v += two_pi;
        out[i] = v;
    }
    return out;
}

struct CoreResult {
    SolveStatus status = SolveStatus::no_convergence;
    std::vector<double> theta;
    int iterations = 0;
    double fnorm = 0.0;
};

CoreResult newton_core(const Network& net, const std::vector<double>& omega, double k,
                       std::vector<double> theta, double tol, int budget) {
    const int n = net.size();
    PhaseState st{std::move(theta), omega, k};
    std::vector<double> res = residual(net, st);
    double fnorm = max_abs(res);
    int it = 0;

    while (fnorm >= tol) {
        if (it >= budget) return {SolveStatus::no_convergence, st.theta, it, fnorm};

        Matrix full = jacobian(net, k, st.theta);
        Matrix reduced(n - 1, n - 1);
        for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b) reduced(a, b) = -full(a + 1, b + 1);
        std::vector<double> rhs(res.begin() + 1, res.end());
        auto step = solve_linear(reduced, rhs);
        if (!step) return {SolveStatus::singular_jacobian, st.theta, it, fnorm};

        double lambda = 1.0;
        std::vector<double> trial(n), trial_res;
        double trial_norm = 0.0;
        for (int halvings = 0;; ++halvings) {
            trial = st.theta;
            for (int i = 1; i < n; ++i) trial[i] -= lambda * (*step)[i - 1];
            trial_res = residual(net, {trial, omega, k});
            trial_norm = max_abs(trial_res);
            if (trial_norm < fnorm || halvings >= 30) break;
            lambda *= 0.5;
        }
        st.theta = trial;
        res = trial_res;
        fnorm = trial_norm;
        ++it;
    }
    return {SolveStatus::converged, st.theta, it, fnorm};
}

} // namespace

std::vector<double> residual(const Network& net, const PhaseState& state) {
    if (static_cast<int>(state.theta.size()) != net.size() ||
        static_cast<int>(state.omega.size()) != net.size())
        throw std::invalid_argument("residual: dimensions do not match network");
    if (net.size() == 0) throw std::invalid_argument("residual: empty network");
    if (!(state.k > 0.0)) throw std::invalid_argument("residual: coupling must be positive");

    double wbar = mean_frequency(state.omega);
    std::vector<double> res(net.size());
    for (int i = 0; i < net.size(); ++i) res[i] = wbar - state.omega[i];
    for (auto [i, j] : net.edges()) {
        double s = state.k * std::sin(state.theta[j] - state.theta[i]);
        res[i] -= s;
        res[j] += s;
    }
    return res;
}

double residual_max_norm(const Network& net, const PhaseState& state) {
    return max_abs(residual(net, state));
}

NewtonResult solve_newton(const Network& net, const PhaseState& guess, double tol, int max_iter) {
    if (static_cast<int>(guess.theta.size()) != net.size() ||
        static_cast<int>(guess.omega.size()) != net.size())
        throw std::invalid_argument("solve_newton: dimensions do not match network");
    if (net.size() < 1) throw std::invalid_argument("solve_newton: empty network");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_newton: tolerance must be positive");
    if (max_iter < 1) throw std::invalid_argument("solve_newton: max_iter must be >= 1");
    if (!(guess.k > 0.0)) throw std::invalid_argument("solve_newton: coupling must be positive");

    std::vector<double> theta = guess.theta;
    double base = theta[0];
    for (double& v : theta) v -= base;

    CoreResult core = newton_core(net, guess.omega, guess.k, theta, tol, max_iter);
    NewtonResult result;
    result.status = core.status;
    result.iterations = core.iterations;
    result.final_residual = core.fnorm;
    if (core.status != SolveStatus::converged) return result;

    // Prefer the wrapped representative; re-polish if wrapping nudges the
    // residual past tol (sin of a shifted argument is not bit-identical).
    std::vector<double> wrapped = wrap_phases(core.theta);
    double wrapped_norm = residual_max_norm(net, {wrapped, guess.omega, guess.k});
    if (wrapped_norm >= tol) {
        CoreResult polish = newton_core(net, guess.omega, guess.k, wrapped, tol, 5);
        if (polish.status == SolveStatus::converged) {
            result.iterations += polish.iterations;
            wrapped = polish.theta;
            wrapped_norm = polish.fnorm;
        } else {
            wrapped = core.theta;
            wrapped_norm = core.fnorm;
        }
    }

    FixedPoint fp;
    fp.theta = std::move(wrapped);
    fp.residual_norm = wrapped_norm;
    fp.homogeneous = all_equal(guess.omega);
    fp.grounded_node = 0;
    result.point = std::move(fp);
    result.final_residual = result.point->residual_norm;
    return result;
}

std::vector<double> twisted_state(int n, int q) {
    if (n < 3) throw std::invalid_argument("twisted_state: n must be at least 3");
    // one shared step: its rounding is linear in i and cancels out of the
    // phase differences that the dynamics actually sees
    double step = two_pi * static_cast<double>(q) / static_cast<double>(n);
    std::vector<double> theta(n);
    for (int i = 0; i < n; ++i) theta[i] = static_cast<double>(i) * step;
    return theta;
}

bool is_zero_fixed_point(const std::vector<double>& theta, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_zero_fixed_point: tolerance must be positive");
    const int n = static_cast<int>(theta.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(std::remainder(theta[i] - theta[j], two_pi)) >= tol) return false;
    return true;
}

FixedPoint make_fixed_point(const Network& net, std::vector<double> theta,
                            const std::vector<double>& omega, double k) {
    if (static_cast<int>(theta.size()) != net.size())
        throw std::invalid_argument("make_fixed_point: dimensions do not match network");
    if (net.size() < 1) throw std::invalid_argument("make_fixed_point: empty network");
    double base = theta[0];
    for (double& v : theta) v -= base;

    FixedPoint fp;
    fp.residual_norm = residual_max_norm(net, {theta, omega, k});
    fp.theta = std::move(theta);
    fp.homogeneous = all_equal(omega);
    fp.grounded_node = 0;
    return fp;
}

std::string phases_to_csv(const std::vector<double>& theta) {
    return join_csv(theta, 17);
}

} // namespace kuramoto
