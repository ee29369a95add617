#include "rowsolve/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rowsolve {

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be at least 1x1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void require_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: entries must be finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{}) {
    require_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_shape(rows, cols);
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows_ * cols_) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require_shape(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer rows");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix eye(n, n);
    for (std::size_t i = 0; i < n; ++i) eye(i, i) = Complex{1.0, 0.0};
    return eye;
}

ColumnVector column_vector(std::vector<Complex> entries) {
    const std::size_t n = entries.size();
    return ComplexMatrix(n, 1, std::move(entries));
}

Complex inner_product(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("inner_product: length mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    Complex sum{};
    for (std::size_t j = 0; j < u.size(); ++j) {
        sum += u[j] * std::conj(v[j]);
    }
    return sum;
}

double euclidean_norm(std::span<const Complex> u) {
    double sum = 0.0;
    for (const Complex& z : u) {
        sum += z.real() * z.real() + z.imag() * z.imag();
    }
    return std::sqrt(sum);
}

namespace {

std::span<const Complex> column_span(const ColumnVector& u, const char* who) {
    if (u.cols() != 1) {
        throw std::invalid_argument(std::string(who) + ": expected a column vector, got " +
                                    std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
    }
    return u.entries();
}

}  // namespace

Complex inner_product(const ColumnVector& u, const ColumnVector& v) {
    return inner_product(column_span(u, "inner_product"), column_span(v, "inner_product"));
}

double euclidean_norm(const ColumnVector& u) {
    return euclidean_norm(column_span(u, "euclidean_norm"));
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& q) {
    ComplexMatrix result(q.cols(), q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) {
            result(j, i) = std::conj(q(i, j));
        }
    }
    return result;
}

ComplexMatrix matrix_product(const ComplexMatrix& p, const ComplexMatrix& q) {
    if (p.cols() != q.rows()) {
        throw std::invalid_argument("matrix_product: inner dimensions disagree (" +
                                    std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                                    " times " + std::to_string(q.rows()) + "x" +
                                    std::to_string(q.cols()) + ")");
    }
    ComplexMatrix result(p.rows(), q.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t k = 0; k < p.cols(); ++k) {
            const Complex pik = p(i, k);
            if (pik == Complex{}) continue;
            for (std::size_t j = 0; j < q.cols(); ++j) {
                result(i, j) += pik * q(k, j);
            }
        }
    }
    return result;
}

ComplexMatrix operator*(const ComplexMatrix& p, const ComplexMatrix& q) {
    return matrix_product(p, q);
}

namespace {

void require_same_shape(const ComplexMatrix& p, const ComplexMatrix& q, const char* who) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
    }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& p, const ComplexMatrix& q) {
    require_same_shape(p, q, "operator+");
    ComplexMatrix result(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) result(i, j) = p(i, j) + q(i, j);
    return result;
}

ComplexMatrix operator-(const ComplexMatrix& p, const ComplexMatrix& q) {
    require_same_shape(p, q, "operator-");
    ComplexMatrix result(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) result(i, j) = p(i, j) - q(i, j);
    return result;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& q) {
    ComplexMatrix result(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) result(i, j) = scale * q(i, j);
    return result;
}

double frobenius_norm(const ComplexMatrix& q) {
    return euclidean_norm(q.entries());
}

double max_abs(const ComplexMatrix& q) {
    double worst = 0.0;
    for (const Complex& z : q.entries()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

}  // namespace rowsolve
