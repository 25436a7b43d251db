#include "rootform/matrix.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "rootform/errors.hpp"
#include "rootform/kernels.hpp"

namespace rootform {

namespace {

void require_positive_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw InvalidInput("BadDimensions", "matrix dimensions must be positive, got " +
                                                std::to_string(rows) + "x" + std::to_string(cols));
}

void require_finite(std::span<const double> entries) {
    for (double v : entries)
        if (!std::isfinite(v))
            throw InvalidInput("NonFiniteEntry", "matrix entries must be finite");
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
    require_positive_dims(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_positive_dims(rows, cols);
    if (entries_.size() != rows * cols)
        throw InvalidInput("BadDimensions",
                           "entry count " + std::to_string(entries_.size()) + " does not match " +
                               std::to_string(rows) + "x" + std::to_string(cols));
    require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require_positive_dims(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidInput("BadDimensions", "ragged initializer rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    require_finite(m.data());
    return m;
}

Matrix identity(std::size_t n) { return Matrix::identity(n); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("matmul: " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                     "x" + std::to_string(b.cols()));
    const auto& k = kernels::active();
    Matrix c(a.rows(), b.cols());
    // Row-major: c_i += a_ik * b_k keeps every inner loop contiguous.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t kk = 0; kk < a.cols(); ++kk)
            k.axpy(a(i, kk), b.row(kk).data(), ci.data(), ci.size());
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
    if (blocks.empty())
        throw InvalidInput("EmptyBlockList", "direct_sum: block list is empty");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square())
            throw InvalidInput("NonSquareBlock", "direct_sum: all blocks must be square");
        n += b.rows();
    }
    Matrix out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

Matrix direct_sum(std::initializer_list<Matrix> blocks) {
    return direct_sum(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("operator+: shapes differ");
    Matrix c = a;
    kernels::active().axpy(1.0, b.data().data(), c.data().data(), c.data().size());
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("operator-: shapes differ");
    Matrix c = a;
    kernels::active().axpy(-1.0, b.data().data(), c.data().data(), c.data().size());
    return c;
}

Matrix operator*(double alpha, const Matrix& a) {
    Matrix c = a;
    kernels::active().scal(alpha, c.data().data(), c.data().size());
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

double frobenius_norm(const Matrix& a) {
    return std::sqrt(kernels::active().sum_sq(a.data().data(), a.data().size()));
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size())
        throw DimensionMismatchError("matvec: shapes differ");
    const auto& k = kernels::active();
    std::vector<double> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        y[i] = k.dot(a.row(i).data(), x.data(), x.size());
    return y;
}

double trace(const Matrix& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        t += a(i, i);
    return t;
}

bool approx_equal(const Matrix& x, const Matrix& y, double rtol) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        return false;
    double scale = 1.0 + std::max(frobenius_norm(x), frobenius_norm(y));
    return frobenius_norm(x - y) <= rtol * scale;
}

Matrix repeated_square(Matrix a, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
        a = matmul(a, a);
    return a;
}

} // namespace rootform
