#include "rootform/idempotent.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rootform/errors.hpp"
#include "rootform/lu.hpp"
#include "rootform/predicates.hpp"
#include "internal/column_basis.hpp"

namespace rootform {
namespace {

Matrix invert_or(const Matrix& x, const Tolerances& tol, char which, bool schur) {
    try {
        return lu_invert(x, tol);
    } catch (const SingularError&) {
        if (schur)
            throw SingularSchurError(which);
        throw SingularBlockError(which);
    }
}

void embed(Matrix& dst, std::size_t row0, std::size_t col0, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            dst(row0 + i, col0 + j) = block(i, j);
}

} // namespace

BlockQuadruple::BlockQuadruple(Matrix a_, Matrix b_, Matrix c_, Matrix d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (!a.is_square() || !d.is_square())
        throw DimensionMismatchError("blocks a and d must be square");
    if (b.rows() != a.rows() || b.cols() != d.cols())
        throw DimensionMismatchError("block b must be n x m");
    if (c.rows() != d.rows() || c.cols() != a.cols())
        throw DimensionMismatchError("block c must be m x n");
}

SchurPair schur_pair(const BlockQuadruple& q, const Tolerances& tol) {
    tol.validate();
    const Matrix a_inv = invert_or(q.a, tol, 'a', false);
    const Matrix d_inv = invert_or(q.d, tol, 'd', false);
    const Matrix s = invert_or(q.d - q.c * a_inv * q.b, tol, 's', true);
    const Matrix t = invert_or(q.a - q.b * d_inv * q.c, tol, 't', true);

    // Woodbury-style consistency: the two inversion routes to t must agree;
    // disagreement means the complements were too ill-conditioned to trust.
    const Matrix t_via_s = a_inv + a_inv * q.b * s * q.c * a_inv;
    if (!approx_equal(t_via_s, t, tol))
        throw SingularSchurError('t');
    return {s, t};
}

Matrix block_idempotent(const BlockQuadruple& q, const Tolerances& tol) {
    const SchurPair pair = schur_pair(q, tol);
    const Matrix a_inv = invert_or(q.a, tol, 'a', false);
    const std::size_t n = q.n(), m = q.m();

    Matrix p(n + m, n + m);
    embed(p, 0, 0, q.a * pair.t);
    embed(p, 0, n, -1.0 * (q.b * pair.s));
    embed(p, n, 0, q.c * pair.t);
    embed(p, n, n, -1.0 * (q.c * a_inv * q.b * pair.s));
    return p;
}

Matrix involutory_from_idempotent(const Matrix& p, const Tolerances& tol) {
    if (!is_idempotent(p, tol))
        throw NotIdempotentError();
    return 2.0 * p - identity(p.rows());
}

ExampleFamily example_family(double a, double b, double c, double d, std::size_t n,
                             std::size_t m, const Tolerances& tol) {
    tol.validate();
    if (m < 1 || n < m)
        throw InvalidInput("BadOrder", "orders must satisfy n >= m >= 1");
    for (double v : {a, b, c, d})
        if (!std::isfinite(v))
            throw InvalidInput("NonFiniteEntry", "family parameters must be finite");
    const double ad = a * d, bc = b * c;
    if (std::abs(ad) <= tol.rank_tol)
        throw DegenerateParametersError("ad must be non-zero");
    if (std::abs(ad - bc) <= tol.rank_tol)
        throw DegenerateParametersError("ad must differ from bc");

    const double w = 1.0 / (ad - bc);
    Matrix p(n + m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        p(i, i) = ad * w;        // ad I_m corner of the top-left block
        p(i, n + i) = -a * b * w; // -ab [I_m; 0]
        p(n + i, i) = c * d * w;  // cd [I_m | 0]
        p(n + i, n + i) = -bc * w;
    }
    for (std::size_t i = m; i < n; ++i)
        p(i, i) = 1.0; // (ad - bc) I_{n-m}, scaled by w

    // Cross-check against the general construction on the scalar blocks.
    Matrix qb(n, m), qc(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        qb(i, i) = b;
        qc(i, i) = c;
    }
    const Matrix general = block_idempotent(
        BlockQuadruple(a * identity(n), std::move(qb), std::move(qc), d * identity(m)), tol);
    if (!approx_equal(p, general, tol))
        throw DegenerateParametersError("closed form disagrees with the general construction");

    Matrix t = 2.0 * p - identity(n + m);
    return {std::move(p), std::move(t)};
}

IdempotentCanonicalForm idempotent_canonicalize(const Matrix& p, const Tolerances& tol) {
    tol.validate();
    if (!is_idempotent(p, tol))
        throw NotIdempotentError();
    const std::size_t n = p.rows();

    const auto range_basis = detail::column_basis(p, tol.rank_tol, 1.0);
    const auto kernel_basis = detail::column_basis(identity(n) - p, tol.rank_tol, 1.0);
    if (range_basis.size() + kernel_basis.size() != n)
        throw NotIdempotentError("range and kernel bases do not sum to the matrix order");

    Matrix m(n, n);
    std::size_t col = 0;
    for (const auto& v : range_basis) {
        for (std::size_t i = 0; i < n; ++i)
            m(i, col) = v[i];
        ++col;
    }
    for (const auto& v : kernel_basis) {
        for (std::size_t i = 0; i < n; ++i)
            m(i, col) = v[i];
        ++col;
    }
    return {std::move(m), range_basis.size()};
}

} // namespace rootform
