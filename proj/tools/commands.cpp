#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "rowsolve/matrix_io.hpp"
#include "rowsolve/online.hpp"
#include "rowsolve/solver.hpp"
#include "rowsolve/verify.hpp"

namespace rowsolve_cli {

using json = nlohmann::ordered_json;
using namespace rowsolve;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const ColumnVector& v) {
    json array = json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) array.push_back(complex_json(v(i, 0)));
    return array;
}

json matrix_json(const ComplexMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(complex_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json log_json(const RowOpLog& log) {
    json steps = json::array();
    for (const RowOp& op : log.steps) {
        if (const auto* n = std::get_if<NormalizeStep>(&op)) {
            steps.push_back({{"op", "normalize"}, {"row", n->row + 1}, {"magnitude", n->magnitude}});
        } else if (const auto* o = std::get_if<OrthogonalizeStep>(&op)) {
            steps.push_back({{"op", "orthogonalize"},
                             {"target", o->target + 1},
                             {"source", o->source + 1},
                             {"coefficient", complex_json(o->coefficient)}});
        } else if (const auto* s = std::get_if<SkipZeroStep>(&op)) {
            steps.push_back({{"op", "skip_zero"}, {"row", s->row + 1}});
        }
    }
    return steps;
}

void print_matrix_section(std::ostream& out, const std::string& name, const ComplexMatrix& a) {
    out << name << ": " << a.rows() << " x " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << format_complex(a(i, j));
        }
        out << "\n";
    }
}

void print_vector_section(std::ostream& out, const std::string& name, const ColumnVector& v) {
    out << name << ":\n";
    for (std::size_t i = 0; i < v.rows(); ++i) out << format_complex(v(i, 0)) << "\n";
}

void print_log_section(std::ostream& out, const RowOpLog& log) {
    out << "log: " << log.steps.size() << " step(s)\n";
    for (const RowOp& op : log.steps) {
        if (const auto* n = std::get_if<NormalizeStep>(&op)) {
            out << "normalize row " << n->row + 1 << " / " << format_double(n->magnitude) << "\n";
        } else if (const auto* o = std::get_if<OrthogonalizeStep>(&op)) {
            out << "orthogonalize row " << o->target + 1 << " -= ("
                << format_complex(o->coefficient) << ") * row " << o->source + 1 << "\n";
        } else if (const auto* s = std::get_if<SkipZeroStep>(&op)) {
            out << "skip row " << s->row + 1 << " (zero norm)\n";
        }
    }
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) tokens.emplace_back(text.substr(start, pos - start));
    }
    return tokens;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

}  // namespace

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) try {
    static const std::set<std::string> known_emits{"xp", "proj", "ginv", "nullbasis", "m", "log"};
    std::set<std::string> emit(options.emit.begin(), options.emit.end());
    for (const std::string& token : emit) {
        if (!known_emits.count(token)) {
            err << "error: unknown --emit selection '" << token
                << "' (expected xp, proj, ginv, nullbasis, m, log)\n";
            return 1;
        }
    }
    const bool wants_g = emit.count("ginv") || emit.count("m");

    Variation variation = Variation::transform_rhs;
    if (options.variation.empty()) {
        variation = wants_g ? Variation::accumulate_m : Variation::transform_rhs;
    } else if (options.variation == "accumulate-m") {
        variation = Variation::accumulate_m;
    } else if (wants_g) {
        err << "error: --emit ginv/m requires --variation accumulate-m\n";
        return 1;
    }

    const ComplexMatrix a = read_matrix_file(options.matrix_path);
    const ComplexMatrix rhs = read_matrix_file(options.rhs_path);
    if (rhs.rows() != a.rows()) {
        err << "error: rhs has " << rhs.rows() << " rows but the matrix has " << a.rows() << "\n";
        return 1;
    }
    const double basis_tol = std::max(options.eps, 1e-12);

    if (rhs.cols() == 1) {
        const SolveResult result = solve(a, rhs, variation, options.eps);
        if (options.json) {
            json document;
            document["x_p"] = vector_json(result.x_p);
            document["rank"] = result.rank;
            document["consistent"] = result.consistent;
            document["norm_x_p"] = euclidean_norm(result.x_p);
            if (result.offending_row) document["offending_row"] = *result.offending_row + 1;
            if (emit.count("proj")) document["projector"] = matrix_json(result.projector);
            if (emit.count("ginv")) document["g"] = matrix_json(*result.g);
            if (emit.count("m")) document["m_factor"] = matrix_json(*result.m_factor);
            if (emit.count("nullbasis")) {
                json basis = json::array();
                for (const ColumnVector& v : null_space_basis(result.projector, basis_tol)) {
                    basis.push_back(vector_json(v));
                }
                document["null_basis"] = std::move(basis);
            }
            if (emit.count("log")) document["log"] = log_json(result.log);
            out << document.dump(2) << "\n";
        } else {
            out << "rank: " << result.rank << "\n";
            out << "consistent: " << yes_no(result.consistent) << "\n";
            if (result.offending_row) out << "offending_row: " << *result.offending_row + 1 << "\n";
            out << "norm_x_p: " << format_double(euclidean_norm(result.x_p)) << "\n";
            if (emit.count("xp")) print_vector_section(out, "x_p", result.x_p);
            if (emit.count("proj")) print_matrix_section(out, "projector", result.projector);
            if (emit.count("ginv")) print_matrix_section(out, "g", *result.g);
            if (emit.count("m")) print_matrix_section(out, "m_factor", *result.m_factor);
            if (emit.count("nullbasis")) {
                const std::vector<ColumnVector> basis = null_space_basis(result.projector, basis_tol);
                out << "null_basis: " << basis.size() << " vector(s), one per line\n";
                for (const ColumnVector& v : basis) {
                    for (std::size_t i = 0; i < v.rows(); ++i) {
                        if (i) out << ' ';
                        out << format_complex(v(i, 0));
                    }
                    out << "\n";
                }
            }
            if (emit.count("log")) print_log_section(out, result.log);
        }
        return result.consistent ? 0 : 2;
    }

    // multi-column rhs: one orthonormalization pass solves A X = B
    const MatrixSolveResult result = solve_matrix_rhs(a, rhs, options.eps);
    bool all_consistent = true;
    for (const ConsistencyReport& report : result.column_consistency) {
        all_consistent = all_consistent && report.consistent;
    }
    if (options.json) {
        json document;
        document["x_p"] = matrix_json(result.x_p);
        document["rank"] = result.rank;
        json consistent = json::array();
        json offenders = json::array();
        for (const ConsistencyReport& report : result.column_consistency) {
            consistent.push_back(report.consistent);
            if (report.offending_row) {
                offenders.push_back(*report.offending_row + 1);
            } else {
                offenders.push_back(nullptr);
            }
        }
        document["consistent"] = std::move(consistent);
        if (!all_consistent) document["offending_rows"] = std::move(offenders);
        document["norm_x_p"] = frobenius_norm(result.x_p);
        if (emit.count("proj")) document["projector"] = matrix_json(result.projector);
        if (emit.count("ginv")) document["g"] = matrix_json(result.g);
        if (emit.count("m")) document["m_factor"] = matrix_json(result.m_factor);
        if (emit.count("nullbasis")) {
            json basis = json::array();
            for (const ColumnVector& v : null_space_basis(result.projector, basis_tol)) {
                basis.push_back(vector_json(v));
            }
            document["null_basis"] = std::move(basis);
        }
        if (emit.count("log")) document["log"] = log_json(result.log);
        out << document.dump(2) << "\n";
    } else {
        out << "rank: " << result.rank << "\n";
        out << "consistent:";
        for (const ConsistencyReport& report : result.column_consistency) {
            out << ' ' << yes_no(report.consistent);
        }
        out << "\n";
        out << "norm_x_p: " << format_double(frobenius_norm(result.x_p)) << "\n";
        if (emit.count("xp")) print_matrix_section(out, "x_p", result.x_p);
        if (emit.count("proj")) print_matrix_section(out, "projector", result.projector);
        if (emit.count("ginv")) print_matrix_section(out, "g", result.g);
        if (emit.count("m")) print_matrix_section(out, "m_factor", result.m_factor);
        if (emit.count("log")) print_log_section(out, result.log);
    }
    return all_consistent ? 0 : 2;
} catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
}

int run_stream(const StreamOptions& options, std::istream& in, std::ostream& out,
               std::ostream& err) try {
    std::string line;
    std::size_t line_number = 0;
    auto fail = [&](const std::string& message) {
        err << "error: line " << line_number << ": " << message << "\n";
        return 1;
    };

    std::size_t n = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (is_skippable(line)) continue;
        const std::vector<std::string> tokens = split_tokens(line);
        if (tokens.size() != 2 || tokens[0] != "n") {
            return fail("expected the header `n <count>`");
        }
        try {
            const long count = std::stol(tokens[1]);
            if (count < 1) return fail("column count must be >= 1");
            n = static_cast<std::size_t>(count);
        } catch (const std::exception&) {
            return fail("column count must be a positive integer");
        }
        have_header = true;
        break;
    }
    if (!have_header) return fail("missing the header `n <count>`");

    StreamingSolver solver(n, options.eps, options.track_g, options.reorth);
    json increments = json::array();
    bool ended = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (is_skippable(line)) continue;
        const std::vector<std::string> tokens = split_tokens(line);
        if (tokens.size() == 1 && tokens[0] == "END") {
            ended = true;
            break;
        }
        if (tokens.size() != n + 2 || tokens[n] != "|") {
            return fail("expected `<" + std::to_string(n) + " entries> | <b entry>`");
        }
        std::vector<Complex> row(n);
        Complex b_entry;
        try {
            for (std::size_t j = 0; j < n; ++j) row[j] = parse_complex(tokens[j]);
        } catch (const std::invalid_argument& e) {
            return fail(e.what());
        }
        try {
            b_entry = parse_complex(tokens[n + 1]);
        } catch (const std::invalid_argument& e) {
            return fail(e.what());
        }

        const Increment increment = solver.ingest_row(row, b_entry);
        const double running_norm = solver.norm_history().back();
        json record;
        record["row"] = increment.index + 1;
        record["x_p_inc"] = vector_json(increment.x_p_inc);
        record["norm"] = running_norm;
        record["rank"] = solver.rank();
        record["was_zero_row"] = increment.was_zero_row;
        record["inconsistency"] = increment.inconsistency_detected;
        if (options.json) {
            out << record.dump() << "\n";
        } else {
            out << "row " << increment.index + 1 << ": rank=" << solver.rank()
                << " norm=" << format_double(running_norm)
                << " zero=" << yes_no(increment.was_zero_row)
                << " inconsistent=" << yes_no(increment.inconsistency_detected) << " x_p_inc=";
            for (std::size_t j = 0; j < n; ++j) {
                out << ' ' << format_complex(increment.x_p_inc(j, 0));
            }
            out << "\n";
        }
        increments.push_back(std::move(record));
    }
    if (!ended) return fail("missing the END terminator");

    const SolveResult result = solver.finalize();
    if (options.json) {
        json document;
        document["x_p"] = vector_json(result.x_p);
        document["rank"] = result.rank;
        document["consistent"] = result.consistent;
        document["norm_x_p"] = euclidean_norm(result.x_p);
        if (result.offending_row) document["offending_row"] = *result.offending_row + 1;
        document["increments"] = std::move(increments);
        if (result.g) document["g"] = matrix_json(*result.g);
        if (result.m_factor) document["m_factor"] = matrix_json(*result.m_factor);
        out << document.dump() << "\n";
    } else {
        out << "rank: " << result.rank << "\n";
        out << "consistent: " << yes_no(result.consistent) << "\n";
        if (result.offending_row) out << "offending_row: " << *result.offending_row + 1 << "\n";
        out << "norm_x_p: " << format_double(euclidean_norm(result.x_p)) << "\n";
        print_vector_section(out, "x_p", result.x_p);
        if (result.g) print_matrix_section(out, "g", *result.g);
        if (result.m_factor) print_matrix_section(out, "m_factor", *result.m_factor);
    }
    return result.consistent ? 0 : 2;
} catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
}

int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err) try {
    const ComplexMatrix a = read_matrix_file(options.matrix_path);
    const ComplexMatrix g = read_matrix_file(options.ginv_path);
    const PenroseReport report = penrose_check(a, g, options.tol);
    const bool accepted = report.p1.holds && report.p2.holds && report.p4.holds;

    if (options.json) {
        json document;
        json penrose;
        const ConditionResult* conditions[] = {&report.p1, &report.p2, &report.p3, &report.p4};
        const char* names[] = {"p1", "p2", "p3", "p4"};
        for (int c = 0; c < 4; ++c) {
            penrose[names[c]] = {{"holds", conditions[c]->holds},
                                 {"residual", conditions[c]->residual}};
        }
        document["penrose"] = std::move(penrose);
        document["inferred_class"] = report.inferred_class;
        document["tol"] = options.tol;
        out << document.dump(2) << "\n";
    } else {
        auto print_condition = [&](const char* label, const ConditionResult& condition) {
            out << label << ": " << (condition.holds ? "holds" : "fails")
                << "  residual " << format_double(condition.residual) << "\n";
        };
        print_condition("p1 (A G A = A)", report.p1);
        print_condition("p2 (G A G = G)", report.p2);
        print_condition("p3 (A G Hermitian)", report.p3);
        print_condition("p4 (G A Hermitian)", report.p4);
        out << "inferred_class: {";
        for (std::size_t i = 0; i < report.inferred_class.size(); ++i) {
            if (i) out << ',';
            out << report.inferred_class[i];
        }
        out << "}\n";
        out << "tol: " << format_double(options.tol) << "\n";
    }
    return accepted ? 0 : 3;
} catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
}

}  // namespace rowsolve_cli
