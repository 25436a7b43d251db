#include "rootform/predicates.hpp"

#include "rootform/errors.hpp"

namespace rootform {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square())
        throw DimensionMismatchError(std::string(op) + ": matrix must be square");
}

double scaled_bound(const Matrix& a, const Tolerances& tol) {
    double nf = frobenius_norm(a);
    return tol.eq_rtol * (1.0 + nf * nf);
}

} // namespace

double involutory_residual(const Matrix& a) {
    require_square(a, "involutory_residual");
    return frobenius_norm(matmul(a, a) - identity(a.rows()));
}

double idempotent_residual(const Matrix& a) {
    require_square(a, "idempotent_residual");
    return frobenius_norm(matmul(a, a) - a);
}

double orthogonality_residual(const Matrix& a) {
    require_square(a, "orthogonality_residual");
    return frobenius_norm(matmul(transpose(a), a) - identity(a.rows()));
}

bool is_involutory(const Matrix& a, const Tolerances& tol) {
    return involutory_residual(a) <= scaled_bound(a, tol);
}

bool is_idempotent(const Matrix& a, const Tolerances& tol) {
    return idempotent_residual(a) <= scaled_bound(a, tol);
}

bool is_orthogonal(const Matrix& a, const Tolerances& tol) {
    return orthogonality_residual(a) <= scaled_bound(a, tol);
}

} // namespace rootform
