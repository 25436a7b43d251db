#include "rootform/lu.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "rootform/errors.hpp"
#include "rootform/kernels.hpp"

namespace rootform {

namespace {

struct LuFactors {
    Matrix lu;                     // L below diagonal (unit), U on and above
    std::vector<std::size_t> perm; // row permutation: factored row i came from perm[i]
    int sign = 1;                  // permutation sign
    double max_pivot = 0.0;
};

LuFactors factor(const Matrix& a) {
    if (!a.is_square())
        throw DimensionMismatchError("lu: matrix must be square");
    const std::size_t n = a.rows();
    const auto& k = kernels::active();

    LuFactors f{a, std::vector<std::size_t>(n), 1, 0.0};
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    Matrix& m = f.lu;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(m(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            double v = std::abs(m(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(col, j), m(piv, j));
            std::swap(f.perm[col], f.perm[piv]);
            f.sign = -f.sign;
        }
        f.max_pivot = std::max(f.max_pivot, best);
        double p = m(col, col);
        if (p == 0.0)
            continue; // structurally singular column; leave zero pivot in place
        for (std::size_t i = col + 1; i < n; ++i) {
            double factor = m(i, col) / p;
            m(i, col) = factor;
            if (col + 1 < n)
                k.axpy(-factor, &m(col, col + 1), &m(i, col + 1), n - col - 1);
        }
    }
    return f;
}

void check_pivots(const LuFactors& f, const Tolerances& tol) {
    const std::size_t n = f.lu.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(f.lu(i, i)) < tol.rank_tol * f.max_pivot || f.lu(i, i) == 0.0)
            throw SingularError(i);
}

} // namespace

Matrix lu_invert(const Matrix& a, const Tolerances& tol) {
    tol.validate();
    LuFactors f = factor(a);
    check_pivots(f, tol);

    const std::size_t n = a.rows();
    const Matrix& m = f.lu;
    Matrix inv(n, n);
    std::vector<double> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        // Solve L y = P e_col, then U x = y.
        for (std::size_t i = 0; i < n; ++i) {
            double v = (f.perm[i] == col) ? 1.0 : 0.0;
            for (std::size_t j = 0; j < i; ++j)
                v -= m(i, j) * x[j];
            x[i] = v;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double v = x[ii];
            for (std::size_t j = ii + 1; j < n; ++j)
                v -= m(ii, j) * x[j];
            x[ii] = v / m(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i)
            inv(i, col) = x[i];
    }
    return inv;
}

double det(const Matrix& a, const Tolerances& tol) {
    tol.validate();
    LuFactors f = factor(a);
    double d = f.sign;
    for (std::size_t i = 0; i < a.rows(); ++i)
        d *= f.lu(i, i);
    return d;
}

} // namespace rootform
