#pragma once

#include <cstddef>

#include "rootform/matrix.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

/// The (A, B, C, D) input of the block idempotent construction: a is n x n,
/// d is m x m, b is n x m, c is m x n. Shapes are validated on construction;
/// invertibility of a and d is checked where it is needed, in schur_pair.
struct BlockQuadruple {
    BlockQuadruple(Matrix a, Matrix b, Matrix c, Matrix d);

    std::size_t n() const noexcept { return a.rows(); }
    std::size_t m() const noexcept { return d.rows(); }

    Matrix a;
    Matrix b;
    Matrix c;
    Matrix d;
};

/// The two Schur complement inverses: s = (d - c a^-1 b)^-1 (m x m) and
/// t = (a - b d^-1 c)^-1 (n x n).
struct SchurPair {
    Matrix s;
    Matrix t;
};

/// Closed-form family member: p idempotent, t = 2p - I involutory.
struct ExampleFamily {
    Matrix p;
    Matrix t;
};

/// Invertible m with m^-1 * p * m = I_rank (+) 0.
struct IdempotentCanonicalForm {
    Matrix m;
    std::size_t rank = 0;
};

/// Both Schur complement inverses of the quadruple. Also asserts the
/// Woodbury-style identity a^-1 + a^-1 b s c a^-1 = t as an internal
/// consistency check of the inversions.
SchurPair schur_pair(const BlockQuadruple& q, const Tolerances& tol = {});

/// The (n+m)-square idempotent [[a t, -b s], [c t, -c a^-1 b s]].
Matrix block_idempotent(const BlockQuadruple& q, const Tolerances& tol = {});

/// 2p - I, involutory whenever p is idempotent.
Matrix involutory_from_idempotent(const Matrix& p, const Tolerances& tol = {});

/// The scalar-parameter family: p is the (n+m)-square idempotent
///
///   1/(ad-bc) * [[ad I_m (+) (ad-bc) I_{n-m},  -ab [I_m; 0]],
///                [cd [I_m | 0],                -bc I_m      ]]
///
/// with t = 2p - I. Requires n >= m >= 1, ad != 0 and ad != bc. The result is
/// cross-checked against the general block_idempotent path on
/// (a I_n, b [I_m; 0], c [I_m | 0], d I_m).
ExampleFamily example_family(double a, double b, double c, double d, std::size_t n,
                             std::size_t m, const Tolerances& tol = {});

/// Similarity taking an idempotent to I_r (+) 0: columns of m are a column
/// basis of p (its range) followed by a column basis of I - p (its kernel,
/// since range(I - p) = ker(p) for idempotents).
IdempotentCanonicalForm idempotent_canonicalize(const Matrix& p, const Tolerances& tol = {});

} // namespace rootform
