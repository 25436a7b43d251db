#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootform/matrix.hpp"
#include "rootform/orthogonal_form.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

/// Parameters of one Psi(a, b) block; b must stay away from zero. The default
/// (0, 1) is the pure quarter turn, which is the only choice that keeps roots
/// of orthogonal inputs orthogonal.
struct PsiParam {
    double a = 0.0;
    double b = 1.0;
};

/// Free choices the root constructors expose: one +-1 sign per positive
/// (identity-direction) diagonal entry and one (a, b) pair per negative
/// eigenvalue pair. Leaving a field empty selects the defaults: all +1 and
/// Psi(0, 1) everywhere.
struct RootOptions {
    std::optional<std::vector<int>> signs;
    std::optional<std::vector<PsiParam>> psi_params;
};

/// Output of involutory_eigenbasis: b is invertible with
/// b^-1 * a * b = diag(1, ..., 1, -1, ..., -1), positive_count leading ones.
struct InvolutoryEigenbasis {
    Matrix b;
    std::size_t positive_count = 0;
};

/// Successive 2^k-th roots of one orthogonal matrix: (p * dk[k-1] * p^T)^(2^k)
/// reconstructs the input, and dk[k-1] -> I as k grows.
struct RootTower {
    Matrix p;
    std::vector<Matrix> dk;
    std::size_t depth = 0;
};

/// Classification of an orthogonal matrix by its canonical block content.
/// InvolutoryOrthogonal: only +-1 blocks (the matrix squares to I).
/// HasRealOrthogonalRoot: rotation blocks present and -1 count even.
/// NoRealRootConstruction: -1 count odd; no construction in scope applies
/// (this does not assert that no real root exists at larger orders).
enum class OrthogonalKind { InvolutoryOrthogonal, HasRealOrthogonalRoot, NoRealRootConstruction };

const char* to_string(OrthogonalKind kind);

/// A matrix can be involutory and root-eligible at once (-I is both), so the
/// dominant label and the eligibility flag are reported separately.
struct OrthogonalClassification {
    OrthogonalKind kind;
    bool root_eligible = false;
};

/// Largest accepted tower depth; 2^-41 scaled angles sit below every
/// tolerance the library distinguishes.
inline constexpr std::size_t kMaxTowerDepth = 40;

/// Real eigenbasis of an involutory matrix via the spectral projectors
/// (I + a)/2 and (I - a)/2, reduced to column bases with rank_tol.
InvolutoryEigenbasis involutory_eigenbasis(const Matrix& a, const Tolerances& tol = {});

/// Real square root of an involutory matrix. Exists iff the -1 eigenvalue
/// count is even (equivalently det a > 0); otherwise throws
/// OddNegativeMultiplicity. R = b * D * b^-1 where D = diag(signs) (+) Psi
/// blocks, so R^2 = a exactly in exact arithmetic.
Matrix involutory_real_root(const Matrix& a, const RootOptions& opts = {},
                            const Tolerances& tol = {});

/// Real square root of a symmetric matrix whose negative eigenvalues pair up.
/// R = q^T * D * q over the spectral decomposition; positive directions get
/// +-sqrt(lambda), each negative pair gets sqrt(-lambda) * Psi(a, b). The
/// result is generally not symmetric once negative eigenvalues exist.
Matrix symmetric_real_root(const Matrix& s, const RootOptions& opts = {},
                           const Tolerances& tol = {});

/// Real orthogonal square root of an orthogonal matrix with an even count of
/// -1 blocks: -1 pairs become rotation(pi/2), every rotation angle is halved,
/// +1 directions stay fixed.
Matrix orthogonal_real_root(const Matrix& q, const Tolerances& tol = {});

/// The root-approximation tower: dk[j-1] carries the canonical angles divided
/// by 2^j. depth must lie in [1, 40]; beyond that the angles underflow any
/// sensible tolerance.
RootTower root_tower(const Matrix& q, std::size_t depth, const Tolerances& tol = {});

OrthogonalClassification classify_orthogonal(const Matrix& q, const Tolerances& tol = {});

} // namespace rootform
