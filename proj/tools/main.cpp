#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rowsolve: minimum-norm solver for consistent complex linear systems"};
    app.require_subcommand(1);

    rowsolve_cli::SolveOptions solve_options;
    CLI::App* solve = app.add_subcommand(
        "solve", "Solve A x = b (or A X = B for a multi-column rhs) from matrix files");
    solve->add_option("--matrix", solve_options.matrix_path, "coefficient matrix file")
        ->required();
    solve->add_option("--rhs", solve_options.rhs_path, "right-hand side file")->required();
    solve->add_option("--variation", solve_options.variation,
                      "transform-rhs (default) or accumulate-m; the latter also yields G and M")
        ->check(CLI::IsMember({"transform-rhs", "accumulate-m"}));
    solve->add_option("--eps", solve_options.eps,
                      "relative zero-row threshold (default 1e-10; 0 = exact)")
        ->check(CLI::NonNegativeNumber);
    solve->add_option("--emit", solve_options.emit,
                      "comma-separated output selection: xp,proj,ginv,nullbasis,m,log")
        ->delimiter(',');
    solve->add_flag("--json", solve_options.json, "machine-readable JSON output");

    rowsolve_cli::StreamOptions stream_options;
    CLI::App* stream = app.add_subcommand(
        "stream", "Solve online from stdin: `n <count>`, then `<entries> | <b>` rows, then END");
    stream->add_option("--eps", stream_options.eps,
                       "relative zero-row threshold (default 1e-10; 0 = exact)")
        ->check(CLI::NonNegativeNumber);
    stream->add_flag("--track-g", stream_options.track_g,
                     "also accrue the generalized inverse while streaming");
    stream->add_flag("--reorth", stream_options.reorth,
                     "project each row twice for tighter orthogonality");
    stream->add_flag("--json", stream_options.json, "one JSON object per output line");

    rowsolve_cli::CheckOptions check_options;
    CLI::App* check =
        app.add_subcommand("check", "Evaluate the Penrose conditions for a candidate inverse");
    check->add_option("--matrix", check_options.matrix_path, "matrix A file")->required();
    check->add_option("--ginv", check_options.ginv_path, "candidate generalized inverse file")
        ->required();
    check->add_option("--tol", check_options.tol, "residual tolerance (default 1e-8)")
        ->check(CLI::NonNegativeNumber);
    check->add_flag("--json", check_options.json, "machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (solve->parsed()) return rowsolve_cli::run_solve(solve_options, std::cout, std::cerr);
    if (stream->parsed()) {
        return rowsolve_cli::run_stream(stream_options, std::cin, std::cout, std::cerr);
    }
    return rowsolve_cli::run_check(check_options, std::cout, std::cerr);
}
