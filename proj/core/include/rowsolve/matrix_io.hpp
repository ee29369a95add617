#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rowsolve/complex_matrix.hpp"

namespace rowsolve {

/// Parse failure with 1-based location. column counts whitespace-separated
/// tokens on the line; 0 means the whole line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column,
               const std::string& message);

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

/// Matrix file format:
///   - `#`-prefixed lines are comments; blank lines are ignored
///   - first significant line: `m n` (row and column counts, >= 1)
///   - then exactly m lines of n whitespace-separated entries
///   - entry: `re` or `re,im` (no interior spaces), decimal or scientific
/// Entries must be finite. Violations raise ParseError with line/column.
ComplexMatrix read_matrix(std::istream& in, const std::string& source_name = "<stream>");
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Writes the same format back. Numbers are printed with 17 significant
/// digits, so write -> read reproduces the matrix bit for bit (including
/// signed zeros; a lone `re` entry means im = +0).
void write_matrix(std::ostream& out, const ComplexMatrix& a);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a);

/// One entry in the file syntax. Throws std::invalid_argument on malformed
/// or non-finite input.
Complex parse_complex(std::string_view token);

/// `re` when im is +0, otherwise `re,im`; 17 significant digits.
std::string format_complex(Complex z);

/// %.17g; round-trips any finite double exactly.
std::string format_double(double value);

}  // namespace rowsolve
