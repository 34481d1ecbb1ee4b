#ifndef KURAMOTO_CLI_HPP
#define KURAMOTO_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kuramoto::cli {

/// Parsed invocation. Everything except the subcommand and the network
/// choice has a default.
struct RunConfig {
    std::string subcommand;

    std::string network_kind;   // complete | cycle | circulant | file
    int n = 0;
    std::vector<int> offsets;   // circulant
    std::string edges_path;     // file

    double k = 1.0;
    std::string omega_spec = "zero"; // zero | const:<v> | file:<path>
    std::string theta_path;
    std::optional<int> twisted_q;    // draw/certify convenience

    std::uint64_t seed = 0;
    long trials = 1000;
    double tol = 1e-12;
    int max_iter = 100;

    double step = 0.0; // 0 -> 0.01 / (k * max degree)
    long steps = 1000;
    long record_every = 10;

    std::string non_edges; // scan: "0-1,2-3"
    int half_cut_r = 0;    // conj51: also evaluate the half split cut
    int n_to = 0;          // conj51: emit CSV rows for n..n_to

    std::string out_path;
};

/// Dispatch a parsed config. Returns the process exit status:
/// 0 success, 1 solver failure, 2 bad input.
int run(const RunConfig& config, std::ostream& out);

/// Parse argv-style arguments (program name excluded), honoring an optional
/// key=value config file (--config); command-line flags win. Then dispatch.
/// Usage errors and bad inputs come back as exit status 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kuramoto::cli

#endif
