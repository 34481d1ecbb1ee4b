#include "kuramoto/cli.hpp"

#include "kuramoto/dynamics.hpp"
#include "kuramoto/experiments.hpp"
#include "kuramoto/fixpoint.hpp"
#include "kuramoto/network.hpp"
#include "kuramoto/render.hpp"
#include "kuramoto/rng.hpp"
#include "kuramoto/stability.hpp"
#include "kuramoto/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kuramoto::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoi(token));
    }
    return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
            throw std::invalid_argument("expected pairs like 0-1,2-3, got '" + text + "'");
        out.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    }
    return out;
}

Network build_network(const RunConfig& cfg) {
    if (cfg.network_kind == "complete") return Network::complete(cfg.n);
    if (cfg.network_kind == "cycle") return Network::cycle(cfg.n);
    if (cfg.network_kind == "circulant") {
        if (cfg.offsets.empty())
            throw std::invalid_argument("circulant network needs --offsets");
        return Network::circulant(cfg.n, cfg.offsets);
    }
    if (cfg.network_kind == "file") {
        if (cfg.edges_path.empty()) throw std::invalid_argument("--network file needs --edges");
        return Network::load_edge_list_file(cfg.edges_path);
    }
    throw std::invalid_argument("unknown network kind '" + cfg.network_kind +
                                "' (complete|cycle|circulant|file)");
}

std::vector<double> build_omega(const RunConfig& cfg, int n) {
    if (cfg.omega_spec == "zero") return std::vector<double>(n, 0.0);
    if (cfg.omega_spec.rfind("const:", 0) == 0) {
        double v = std::stod(cfg.omega_spec.substr(6));
        return std::vector<double>(n, v);
    }
    if (cfg.omega_spec.rfind("file:", 0) == 0) {
        auto omega = read_csv_line_file(cfg.omega_spec.substr(5));
        if (static_cast<int>(omega.size()) != n)
            throw std::invalid_argument("omega file length does not match network size");
        return omega;
    }
    throw std::invalid_argument("bad --omega spec '" + cfg.omega_spec +
                                "' (zero | const:<v> | file:<path>)");
}

std::vector<double> build_theta(const RunConfig& cfg, int n) {
    if (!cfg.theta_path.empty()) {
        auto theta = read_csv_line_file(cfg.theta_path);
        if (static_cast<int>(theta.size()) != n)
            throw std::invalid_argument("theta file length does not match network size");
        return theta;
    }
    if (cfg.twisted_q) return twisted_state(n, *cfg.twisted_q);
    SplitMix64 rng(cfg.seed);
    std::vector<double> theta(n);
    for (double& v : theta) v = rng.angle();
    return theta;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    Network net = build_network(cfg);
    PhaseState guess{build_theta(cfg, net.size()), build_omega(cfg, net.size()), cfg.k};
    NewtonResult result = solve_newton(net, guess, cfg.tol, cfg.max_iter);

    switch (result.status) {
        case SolveStatus::converged: {
            const FixedPoint& fp = *result.point;
            out << "status: converged\n";
            out << "iterations: " << result.iterations << '\n';
            out << "residual_norm: " << fmt_g(fp.residual_norm) << '\n';
            out << "homogeneous: " << (fp.homogeneous ? "true" : "false") << '\n';
            out << "zero_class: " << (is_zero_fixed_point(fp.theta, 1e-6) ? "true" : "false")
                << '\n';
            out << "theta: " << join_csv(fp.theta, 12) << '\n';
            if (!cfg.out_path.empty())
                write_text_file(cfg.out_path, phases_to_csv(fp.theta) + "\n");
            return 0;
        }
        case SolveStatus::singular_jacobian:
            out << "status: singular_jacobian\n";
            break;
        case SolveStatus::no_convergence:
            out << "status: no_convergence\n";
            break;
    }
    out << "iterations: " << result.iterations << '\n';
    out << "residual_norm: " << fmt_g(result.final_residual) << '\n';
    return 1;
}

int cmd_integrate(const RunConfig& cfg, std::ostream& out) {
    Network net = build_network(cfg);
    PhaseState state{build_theta(cfg, net.size()), build_omega(cfg, net.size()), cfg.k};
    double h = cfg.step > 0.0 ? cfg.step : default_step(net, cfg.k);
    Trajectory traj = integrate_rk4(net, state, h, cfg.steps, cfg.record_every);
    if (cfg.out_path.empty()) {
        write_trajectory_csv(traj, out);
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
        write_trajectory_csv(traj, file);
        out << "wrote " << cfg.out_path << '\n';
    }
    return 0;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
    Network net = build_network(cfg);
    if (cfg.theta_path.empty() && !cfg.twisted_q)
        throw std::invalid_argument("certify needs --theta <path> or --twisted <q>");
    std::vector<double> omega = build_omega(cfg, net.size());
    FixedPoint fp = make_fixed_point(net, build_theta(cfg, net.size()), omega, cfg.k);
    if (!(fp.residual_norm < 1e-8))
        throw std::invalid_argument("phases are not a fixed point (residual " +
                                    fmt_g(fp.residual_norm) + ")");

    std::string text;
    text += "residual_norm: " + fmt_g(fp.residual_norm) + '\n';
    text += to_text(classify(net, cfg.k, fp));

    CutSearchMode mode = net.size() <= 20 ? CutSearchMode::exhaustive : CutSearchMode::heuristic;
    text += std::string("cut_search: ") +
            (mode == CutSearchMode::exhaustive ? "exhaustive" : "heuristic") + '\n';
    if (auto cert = find_unstable_cut(net, fp, mode)) {
        text += to_text(*cert);
    } else {
        text += "cut: none found\n";
    }

    if (net.min_degree() >= net.size() - 2 && !is_zero_fixed_point(fp.theta, 1e-6)) {
        CentroidCut cut = centroid_singleton_cut(net, fp);
        text += "centroid_node: " + std::to_string(cut.node) + '\n';
        text += "centroid_cut_sum: " + fmt_g(cut.cut_sum) + '\n';
        text += "centroid_magnitude: " + fmt_g(cut.centroid_magnitude) + '\n';
    }

    out << text;
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, text);
    return 0;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    SurveyReport report = survey_nonzero_fixed_points(cfg.n, parse_pair_list(cfg.non_edges),
                                                      cfg.trials, cfg.seed);
    std::string text = to_text(report);
    out << text;
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, text);
    return 0;
}

int cmd_conj51(const RunConfig& cfg, std::ostream& out) {
    std::string text;
    if (cfg.n_to > cfg.n) {
        for (int n = cfg.n; n <= cfg.n_to; ++n) text += to_csv(degree_threshold(n)) + '\n';
    } else {
        text = to_text(degree_threshold(cfg.n));
        if (cfg.half_cut_r > 0) {
            text += "half_cut_r: " + std::to_string(cfg.half_cut_r) + '\n';
            text += "half_cut_sum: " + fmt_g(twisted_half_cut(cfg.n, cfg.half_cut_r)) + '\n';
        }
    }
    out << text;
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, text);
    return 0;
}

int cmd_draw(const RunConfig& cfg, std::ostream& out) {
    Network net = build_network(cfg);
    if (cfg.theta_path.empty() && !cfg.twisted_q)
        throw std::invalid_argument("draw needs --theta <path> or --twisted <q>");
    std::vector<double> theta = build_theta(cfg, net.size());
    std::string path = cfg.out_path.empty() ? "diagram.svg" : cfg.out_path;
    render_circle_diagram_file(net, theta, path);
    out << "wrote " << path << '\n';
    return 0;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out);
    if (cfg.subcommand == "integrate") return cmd_integrate(cfg, out);
    if (cfg.subcommand == "certify") return cmd_certify(cfg, out);
    if (cfg.subcommand == "scan") return cmd_scan(cfg, out);
    if (cfg.subcommand == "conj51") return cmd_conj51(cfg, out);
    if (cfg.subcommand == "draw") return cmd_draw(cfg, out);
    throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string offsets_text, twisted_text;

    CLI::App app{"phase-locked states of coupled oscillator networks: solve, classify, certify"};
    app.name("kuramoto");
    app.set_config("--config", "", "key=value configuration file (flags win)");

    app.add_option("--network", cfg.network_kind, "complete|cycle|circulant|file");
    app.add_option("--n", cfg.n, "node count for generated networks");
    app.add_option("--offsets", offsets_text, "circulant offsets, e.g. 1,4");
    app.add_option("--edges", cfg.edges_path, "edge list file (--network file)");
    app.add_option("--k", cfg.k, "coupling constant");
    app.add_option("--omega", cfg.omega_spec, "zero | const:<v> | file:<path>");
    app.add_option("--theta", cfg.theta_path, "phase CSV file");
    app.add_option("--twisted", twisted_text, "use the q-times wound state as phases");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--trials", cfg.trials, "random starts for scan");
    app.add_option("--tol", cfg.tol, "solver tolerance");
    app.add_option("--max-iter", cfg.max_iter, "solver iteration budget");
    app.add_option("--step", cfg.step, "integrator step (default 0.01/(k*max_degree))");
    app.add_option("--steps", cfg.steps, "integrator step count");
    app.add_option("--record-every", cfg.record_every, "trajectory sampling stride");
    app.add_option("--non-edges", cfg.non_edges, "scan: removed edges, e.g. 0-1,2-3");
    app.add_option("--half-cut", cfg.half_cut_r, "conj51: also report the half split cut sum");
    app.add_option("--n-to", cfg.n_to, "conj51: emit CSV rows for n..n-to");
    app.add_option("--out", cfg.out_path, "output file");

    const std::pair<const char*, const char*> commands[] = {
        {"solve", "Newton-solve for a phase-locked state from --theta or a seeded random start"},
        {"integrate", "integrate the flow with fixed-step RK4, emitting trajectory CSV"},
        {"certify", "classify a locked state and search for a non-positive cut certificate"},
        {"scan", "batch random-start survey certifying non-zero locked states unstable"},
        {"conj51", "smallest r with sum of i*cos(2*pi*i/n), i=1..r, turning non-positive"},
        {"draw", "render the configuration as an SVG circle diagram"},
    };
    for (auto [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
    }
    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (!offsets_text.empty()) cfg.offsets = parse_int_list(offsets_text);
        if (!twisted_text.empty()) cfg.twisted_q = std::stoi(twisted_text);
        return run(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace kuramoto::cli
