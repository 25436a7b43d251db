#pragma once

#include "rootform/matrix.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

// Residual-based property checks, Frobenius norm throughout. The residual
// forms are exactly what the bool predicates threshold against
// eq_rtol * (1 + ||a||_F^2); the CLI prints them.

double involutory_residual(const Matrix& a);  // ||a^2 - I||_F
double idempotent_residual(const Matrix& a);  // ||a^2 - a||_F
double orthogonality_residual(const Matrix& a); // ||a^T a - I||_F

bool is_involutory(const Matrix& a, const Tolerances& tol = {});
bool is_idempotent(const Matrix& a, const Tolerances& tol = {});
bool is_orthogonal(const Matrix& a, const Tolerances& tol = {});

} // namespace rootform
