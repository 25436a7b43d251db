#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rootform/tolerances.hpp"

namespace rootform {

/// Dense real matrix, row-major, the universal value type of the library.
/// Dimensions are strictly positive and entries are finite; constructors
/// taking entry data enforce both.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols); // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> values);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::span<double> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const double> data() const noexcept { return entries_; }
    std::span<double> data() noexcept { return entries_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix identity(std::size_t n);

/// Block-diagonal assembly of square blocks; off-diagonal entries exactly zero.
Matrix direct_sum(std::span<const Matrix> blocks);
Matrix direct_sum(std::initializer_list<Matrix> blocks);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double alpha, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b); // matmul

double frobenius_norm(const Matrix& a);
double trace(const Matrix& a);

std::vector<double> matvec(const Matrix& a, std::span<const double> x);

/// Relative Frobenius equality: ||x - y||_F <= rtol * (1 + max(||x||_F, ||y||_F)).
bool approx_equal(const Matrix& x, const Matrix& y, double rtol);
inline bool approx_equal(const Matrix& x, const Matrix& y, const Tolerances& tol) {
    return approx_equal(x, y, tol.eq_rtol);
}

/// a^(2^k) by repeated squaring.
Matrix repeated_square(Matrix a, std::size_t k);

} // namespace rootform
