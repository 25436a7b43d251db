#pragma once

#include <cmath>
#include <vector>

#include "rootform/matrix.hpp"

namespace rootform::detail {

/// Indices of a maximal independent column set of m, found by Gaussian
/// elimination with full pivoting; a pivot below rank_tol times the working
/// scale ends the search. The scale is the first (largest) pivot, floored at
/// scale_floor: projectors have unit-size meaningful entries, so flooring at
/// 1 keeps a matrix that is zero up to rounding from reading as full rank.
/// Indices come out in pivot order.
inline std::vector<std::size_t> independent_columns(const Matrix& m, double rank_tol,
                                                    double scale_floor = 0.0) {
    Matrix w = m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<std::size_t> selected;
    double scale = 0.0;

    for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
        double best = 0.0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i])
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_used[j])
                    continue;
                double v = std::abs(w(i, j));
                if (v > best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (step == 0)
            scale = std::max(best, scale_floor);
        if (best == 0.0 || best < rank_tol * scale)
            break;
        row_used[bi] = true;
        col_used[bj] = true;
        selected.push_back(bj);
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i])
                continue;
            double f = w(i, bj) / w(bi, bj);
            for (std::size_t j = 0; j < cols; ++j)
                w(i, j) -= f * w(bi, j);
        }
    }
    return selected;
}

/// The selected columns of m themselves, as an n x r matrix (r >= 1 required
/// by the caller when it matters; returns nullopt-like empty via r == 0 guard
/// at call sites).
inline std::vector<std::vector<double>> column_basis(const Matrix& m, double rank_tol,
                                                     double scale_floor = 0.0) {
    std::vector<std::vector<double>> basis;
    for (std::size_t j : independent_columns(m, rank_tol, scale_floor)) {
        std::vector<double> col(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            col[i] = m(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace rootform::detail
