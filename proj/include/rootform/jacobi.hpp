#pragma once

#include <cstddef>
#include <vector>

#include "rootform/matrix.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

/// Result of symmetric_eig: the input factors as qᵀ · diag(lambda) · q with
/// q orthogonal (rows are eigenvectors) and lambda sorted descending.
struct SpectralDecomposition {
    Matrix q;
    std::vector<double> lambda;
};

/// Sweep cap for the cyclic Jacobi iteration. Convergence is quadratic, so
/// 30 sweeps is far beyond what n <= 256 needs; exceeding it means the input
/// was not a symmetric matrix in the first place.
inline constexpr std::size_t kJacobiMaxSweeps = 30;

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius mass reaches rounding level (n * eps * ||s||_F),
/// since eigenvector accuracy scales with the remaining off-diagonal mass.
/// Throws NotSymmetricError if ||s - sᵀ||_F > eq_rtol * ||s||_F, and
/// NoConvergenceError if sweeps stall above eq_rtol * ||s||_F or exceed
/// kJacobiMaxSweeps.
SpectralDecomposition symmetric_eig(const Matrix& s, const Tolerances& tol = {});

} // namespace rootform
