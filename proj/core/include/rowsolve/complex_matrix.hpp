#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rowsolve {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Rows are contiguous so the row-oriented
/// orthonormalization kernel can address them as spans without copying.
///
/// Invariants: rows >= 1, cols >= 1, all entries finite. Constructors that
/// accept entry data throw std::invalid_argument on NaN/Inf input; callers
/// mutating entries through operator() are expected to keep them finite.
class ComplexMatrix {
public:
    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// From row-major entries; entries.size() must equal rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// From nested braces, e.g. ComplexMatrix{{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept {
        return entries_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }

    std::span<Complex> row(std::size_t i) noexcept {
        return {entries_.data() + i * cols_, cols_};
    }
    std::span<const Complex> row(std::size_t i) const noexcept {
        return {entries_.data() + i * cols_, cols_};
    }

    std::span<const Complex> entries() const noexcept { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// An n x 1 ComplexMatrix by convention. Operations that require a column
/// vector validate cols() == 1 and throw std::invalid_argument otherwise.
using ColumnVector = ComplexMatrix;

/// Builds an n x 1 column vector from entries.
ColumnVector column_vector(std::vector<Complex> entries);

/// Inner product sum_j u_j * conj(v_j).
///
/// The SECOND argument is conjugated. Every projection coefficient in the
/// row orthonormalization kernel depends on this orientation; flipping it
/// breaks all complex-valued solves in phase.
Complex inner_product(std::span<const Complex> u, std::span<const Complex> v);

/// sqrt(sum_j |u_j|^2); exactly 0 only for the zero vector.
double euclidean_norm(std::span<const Complex> u);

/// Convenience overloads for column vectors.
Complex inner_product(const ColumnVector& u, const ColumnVector& v);
double euclidean_norm(const ColumnVector& u);

/// result(j, i) = conj(q(i, j)); an involution.
ComplexMatrix conjugate_transpose(const ComplexMatrix& q);

/// Standard matrix product; throws std::invalid_argument on an inner
/// dimension mismatch.
ComplexMatrix matrix_product(const ComplexMatrix& p, const ComplexMatrix& q);

ComplexMatrix operator*(const ComplexMatrix& p, const ComplexMatrix& q);
ComplexMatrix operator+(const ComplexMatrix& p, const ComplexMatrix& q);
ComplexMatrix operator-(const ComplexMatrix& p, const ComplexMatrix& q);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& q);

double frobenius_norm(const ComplexMatrix& q);

/// Largest entry magnitude; the residual measure used throughout the tests.
double max_abs(const ComplexMatrix& q);

}  // namespace rowsolve
