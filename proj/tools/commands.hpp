#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rowsolve_cli {

// Exit codes shared by the subcommands:
//   0 success (and, for check, conditions {1,2,4} hold)
//   1 parse, file or dimension error
//   2 inconsistent system (result still emitted)
//   3 check: at least one of conditions {1,2,4} fails
struct SolveOptions {
    std::string matrix_path;
    std::string rhs_path;
    std::string variation;  // empty = pick automatically from --emit
    double eps = 1e-10;
    std::vector<std::string> emit{"xp"};
    bool json = false;
};
int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct StreamOptions {
    double eps = 1e-10;
    bool track_g = false;
    bool reorth = false;
    bool json = false;
};
int run_stream(const StreamOptions& options, std::istream& in, std::ostream& out,
               std::ostream& err);

struct CheckOptions {
    std::string matrix_path;
    std::string ginv_path;
    double tol = 1e-8;
    bool json = false;
};
int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rowsolve_cli
