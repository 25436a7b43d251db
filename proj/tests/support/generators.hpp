#pragma once

// Seeded input builders shared by the test suites. Everything draws from
// rootform::Rng, so a fixed seed reproduces the same matrix everywhere.

#include <cstddef>
#include <vector>

#include "rootform/families.hpp"
#include "rootform/idempotent.hpp"
#include "rootform/lu.hpp"
#include "rootform/matrix.hpp"
#include "rootform/orthogonal_form.hpp"

namespace testgen {

using rootform::Matrix;
using rootform::Rng;

inline Matrix random_entries(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.uniform(-1.0, 1.0);
    return m;
}

/// Involutory matrix b * diag(+-1) * b^-1 with the given -1 count. The +2n
/// diagonal shift keeps b well-conditioned, so the conjugation stays tame.
inline Matrix random_involutory(std::size_t n, std::size_t num_negative, Rng& rng) {
    Matrix b = random_entries(n, n, rng);
    for (std::size_t i = 0; i < n; ++i)
        b(i, i) += 2.0 * static_cast<double>(n);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d(i, i) = i < n - num_negative ? 1.0 : -1.0;
    return b * d * rootform::lu_invert(b, {});
}

/// Orthogonal matrix with prescribed canonical content, conjugated by a
/// seeded orthogonal basis.
inline Matrix orthogonal_with_blocks(std::size_t plus, std::size_t minus,
                                     const std::vector<double>& angles, Rng& rng) {
    using rootform::BlockTag;
    using rootform::CanonicalBlock;
    std::vector<CanonicalBlock> blocks;
    for (std::size_t i = 0; i < plus; ++i)
        blocks.push_back({BlockTag::PlusOne, 0.0});
    for (std::size_t i = 0; i < minus; ++i)
        blocks.push_back({BlockTag::MinusOne, 0.0});
    for (double theta : angles)
        blocks.push_back({BlockTag::Rotation, theta});
    Matrix d = rootform::blocks_direct_sum(blocks);
    Matrix u = rootform::sample_orthogonal(d.rows(), rng);
    return u * d * rootform::transpose(u);
}

/// Frobenius condition estimate ||m|| * ||m^-1||.
inline double cond_estimate(const Matrix& m) {
    return rootform::frobenius_norm(m) * rootform::frobenius_norm(rootform::lu_invert(m, {}));
}

/// Well-conditioned quadruple: diagonally dominant a and d, small couplings,
/// resampled while either Schur complement looks worse than 1e6.
inline rootform::BlockQuadruple random_quadruple(std::size_t n, std::size_t m, Rng& rng) {
    while (true) {
        Matrix a = random_entries(n, n, rng);
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) += 2.0 * static_cast<double>(n);
        Matrix d = random_entries(m, m, rng);
        for (std::size_t i = 0; i < m; ++i)
            d(i, i) += 2.0 * static_cast<double>(m);
        Matrix b = random_entries(n, m, rng);
        Matrix c = random_entries(m, n, rng);

        Matrix s_arg = d - c * rootform::lu_invert(a, {}) * b;
        Matrix t_arg = a - b * rootform::lu_invert(d, {}) * c;
        if (cond_estimate(s_arg) > 1e6 || cond_estimate(t_arg) > 1e6)
            continue;
        return {std::move(a), std::move(b), std::move(c), std::move(d)};
    }
}

/// Denman-Beavers iteration: an independent square-root oracle for matrices
/// with no eigenvalues on the closed negative real axis (used on SPD inputs).
/// Converges quadratically; 100 iterations is far beyond what doubles need.
inline Matrix denman_beavers_sqrt(const Matrix& a, double tol = 1e-13) {
    Matrix y = a;
    Matrix z = rootform::identity(a.rows());
    for (int it = 0; it < 100; ++it) {
        Matrix y_next = 0.5 * (y + rootform::lu_invert(z, {}));
        Matrix z_next = 0.5 * (z + rootform::lu_invert(y, {}));
        double step = rootform::frobenius_norm(y_next - y);
        y = y_next;
        z = z_next;
        if (step <= tol * (1.0 + rootform::frobenius_norm(y)))
            break;
    }
    return y;
}

} // namespace testgen
