#pragma once

#include <stdexcept>

namespace rootform {

/// Numerical policy shared by every operation in the library.
///
/// eq_rtol   relative Frobenius tolerance for matrix equality
/// rank_tol  pivot threshold relative to the largest pivot seen
/// pair_tol  eigenvalue clustering tolerance for multiplicity counting
struct Tolerances {
    double eq_rtol = 1e-10;
    double rank_tol = 1e-10;
    double pair_tol = 1e-8;

    void validate() const {
        auto bad = [](double v) { return !(v > 0.0) || !(v < 1.0); };
        if (bad(eq_rtol) || bad(rank_tol) || bad(pair_tol))
            throw std::invalid_argument("Tolerances: fields must lie strictly in (0, 1)");
    }
};

} // namespace rootform
