#pragma once

#include "rootform/matrix.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

/// Inverse via LU with partial pivoting. A pivot whose magnitude falls below
/// rank_tol times the largest pivot raises SingularError with its index.
Matrix lu_invert(const Matrix& a, const Tolerances& tol = {});

/// Determinant as the signed product of LU pivots; a singular input yields
/// a value that is zero within rounding rather than an error.
double det(const Matrix& a, const Tolerances& tol = {});

} // namespace rootform
