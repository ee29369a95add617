#include "rowsolve/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace rowsolve {

namespace {

std::string locate(const std::string& source, std::size_t line, std::size_t column) {
    std::string where = source + ":" + std::to_string(line);
    if (column > 0) where += ": entry " + std::to_string(column);
    return where;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) tokens.push_back(text.substr(start, pos - start));
    }
    return tokens;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

double parse_double_token(std::string_view token, const char** rest) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{}) {
        throw std::invalid_argument("malformed number '" + std::string(token) + "'");
    }
    *rest = ptr;
    return value;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(locate(source, line, column) + ": " + message),
      source_(source),
      line_(line),
      column_(column) {}

Complex parse_complex(std::string_view token) {
    const char* rest = nullptr;
    const char* end = token.data() + token.size();
    const double re = parse_double_token(token, &rest);
    double im = 0.0;
    if (rest != end) {
        if (*rest != ',') {
            throw std::invalid_argument("malformed entry '" + std::string(token) +
                                        "' (expected `re` or `re,im`)");
        }
        const std::string_view imag_part(rest + 1, static_cast<std::size_t>(end - rest - 1));
        const char* imag_rest = nullptr;
        im = parse_double_token(imag_part, &imag_rest);
        if (imag_rest != end) {
            throw std::invalid_argument("trailing characters in entry '" + std::string(token) + "'");
        }
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::invalid_argument("non-finite entry '" + std::string(token) + "'");
    }
    return {re, im};
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) {
        return format_double(z.real());
    }
    return format_double(z.real()) + "," + format_double(z.imag());
}

ComplexMatrix read_matrix(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_number = 0;

    auto next_significant = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_number;
            if (!is_skippable(line)) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_significant(header)) {
        throw ParseError(source_name, line_number, 0, "missing `m n` header line");
    }
    const auto header_tokens = split_tokens(header);
    if (header_tokens.size() != 2) {
        throw ParseError(source_name, line_number, 0,
                         "header must be exactly `m n`, found " +
                             std::to_string(header_tokens.size()) + " tokens");
    }
    auto parse_count = [&](std::string_view token, std::size_t column) -> std::size_t {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
            throw ParseError(source_name, line_number, column,
                             "dimension must be a positive integer, got '" + std::string(token) + "'");
        }
        return value;
    };
    const std::size_t rows = parse_count(header_tokens[0], 1);
    const std::size_t cols = parse_count(header_tokens[1], 2);

    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string row_line;
        if (!next_significant(row_line)) {
            throw ParseError(source_name, line_number, 0,
                             "expected " + std::to_string(rows) + " data rows, got " +
                                 std::to_string(r));
        }
        const auto tokens = split_tokens(row_line);
        if (tokens.size() != cols) {
            throw ParseError(source_name, line_number, 0,
                             "expected " + std::to_string(cols) + " entries, found " +
                                 std::to_string(tokens.size()));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                entries.push_back(parse_complex(tokens[c]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(source_name, line_number, c + 1, e.what());
            }
        }
    }

    std::string extra;
    if (next_significant(extra)) {
        throw ParseError(source_name, line_number, 0, "unexpected content after the last data row");
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, 0, "cannot open file");
    }
    return read_matrix(in, path.string());
}

void write_matrix(std::ostream& out, const ComplexMatrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << format_complex(a(i, j));
        }
        out << '\n';
    }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    write_matrix(out, a);
}

}  // namespace rowsolve
