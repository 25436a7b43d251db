#include "rootform/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rootform/errors.hpp"
#include "rootform/kernels.hpp"

namespace rootform {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
}

} // namespace

SpectralDecomposition symmetric_eig(const Matrix& s, const Tolerances& tol) {
    tol.validate();
    if (!s.is_square())
        throw DimensionMismatchError("symmetric_eig: matrix must be square");

    const std::size_t n = s.rows();
    const double scale = frobenius_norm(s);
    if (frobenius_norm(s - transpose(s)) > tol.eq_rtol * scale)
        throw NotSymmetricError();

    // Work on the symmetrized copy so roundoff skew cannot accumulate.
    Matrix a = 0.5 * (s + transpose(s));
    Matrix q = identity(n); // accumulates Jᵀ products; rows end up as eigenvectors
    const auto& kern = kernels::active();
    // Sweep down to rounding level, not to the user-facing equality tolerance:
    // eigenvector accuracy is off/gap, and downstream reconstructions need the
    // full machine-precision planes. Quadratic convergence makes the extra
    // sweeps cheap.
    const double target =
        std::numeric_limits<double>::epsilon() * scale * static_cast<double>(n);

    std::size_t sweeps = 0;
    double off = off_diagonal_norm(a);
    while (off > target) {
        if (++sweeps > kJacobiMaxSweeps)
            throw NoConvergenceError(kJacobiMaxSweeps);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t qq = p + 1; qq < n; ++qq) {
                double apq = a(p, qq);
                if (apq == 0.0)
                    continue;
                // Classic 2x2 annihilation: choose the smaller-angle root of
                // t^2 + 2*tau*t - 1 = 0.
                double tau = (a(qq, qq) - a(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sn = t * c;

                // a <- Jᵀ a J with J = plane rotation in (p, qq).
                kern.rot(a.row(p).data(), a.row(qq).data(), n, c, sn);
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a(i, p);
                    double aiq = a(i, qq);
                    a(i, p) = c * aip - sn * aiq;
                    a(i, qq) = sn * aip + c * aiq;
                }
                a(p, qq) = 0.0;
                a(qq, p) = 0.0;

                kern.rot(q.row(p).data(), q.row(qq).data(), n, c, sn);
            }
        }
        double next = off_diagonal_norm(a);
        if (next >= off) {
            // Rounding floor reached. That is fine as long as the matrix is
            // diagonal for every practical purpose; otherwise we truly stalled.
            if (next > tol.eq_rtol * scale)
                throw NoConvergenceError(sweeps);
            break;
        }
        off = next;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SpectralDecomposition out{Matrix(n, n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.lambda[i] = a(order[i], order[i]);
        auto src = q.row(order[i]);
        std::copy(src.begin(), src.end(), out.q.row(i).begin());
    }
    return out;
}

} // namespace rootform
