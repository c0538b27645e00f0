#ifndef HEATBOX_CLI_HPP
#define HEATBOX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace heatbox::cli {

enum class Command { geometry, trace, compare, counting, images, corners };
enum class OutputFormat { csv, json };

struct TimeGrid {
    double t_min = 1e-4;
    double t_max = 1.0;
    int count = 13;
    bool log_spacing = true;

    std::vector<double> points() const;
};

struct RunConfig {
    Command command = Command::geometry;
    std::vector<double> edges;
    double s = 1.0;
    TimeGrid t_grid;
    double e_max = 0.0;
    double edge = 1.0;        // images subcommand
    long long ngon = 0;       // corners subcommand (0 = use angles)
    std::vector<double> angles;
    std::string method = "direct";
    OutputFormat format = OutputFormat::csv;
    std::string out_path;     // empty = stdout
    double tol = 0.0;         // 0 = default quadrature rel_tol
    long long max_terms = 0;  // 0 = default truncation
};

// Exit codes: 0 success, 2 argument error, 3 domain error,
// 4 numerical non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitArgError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitNumericalError = 4;

/// Execute a validated config, writing the table to `out` (or the
/// configured output path) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv-style arguments (without the program name) and execute.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace heatbox::cli

#endif
