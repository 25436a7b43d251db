#include "rootform/orthogonal_form.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rootform/errors.hpp"
#include "rootform/jacobi.hpp"
#include "rootform/kernels.hpp"
#include "rootform/predicates.hpp"

namespace rootform {

Matrix block_matrix(const CanonicalBlock& block) {
    switch (block.tag) {
    case BlockTag::PlusOne:
        return Matrix{{1.0}};
    case BlockTag::MinusOne:
        return Matrix{{-1.0}};
    case BlockTag::Rotation: {
        double c = std::cos(block.theta), s = std::sin(block.theta);
        return Matrix{{c, s}, {-s, c}};
    }
    case BlockTag::Reflection: {
        double c = std::cos(block.theta), s = std::sin(block.theta);
        return Matrix{{c, s}, {s, -c}};
    }
    }
    throw InvalidInput("BadBlockTag", "unknown canonical block tag");
}

Matrix blocks_direct_sum(std::span<const CanonicalBlock> blocks) {
    std::vector<Matrix> mats;
    mats.reserve(blocks.size());
    for (const auto& b : blocks)
        mats.push_back(block_matrix(b));
    return direct_sum(mats);
}

std::size_t count_blocks(std::span<const CanonicalBlock> blocks, BlockTag tag) {
    return static_cast<std::size_t>(
        std::count_if(blocks.begin(), blocks.end(),
                      [tag](const CanonicalBlock& b) { return b.tag == tag; }));
}

namespace {

using Vec = std::vector<double>;

double vdot(const Vec& x, const Vec& y) {
    return kernels::active().dot(x.data(), y.data(), x.size());
}

double vnorm(const Vec& x) {
    return std::sqrt(kernels::active().sum_sq(x.data(), x.size()));
}

void vaxpy(double alpha, const Vec& x, Vec& y) {
    kernels::active().axpy(alpha, x.data(), y.data(), y.size());
}

void vscale(double alpha, Vec& x) { kernels::active().scal(alpha, x.data(), x.size()); }

/// Project the extracted directions out of the remaining cluster basis and
/// re-orthonormalize what is left, dropping the dimensions that collapsed.
/// Pivoted modified Gram-Schmidt: always normalize the longest remaining
/// vector. Starting from an orthonormal basis minus a small subspace, the
/// genuine residuals stay O(1) while collapsed ones sit at rounding level,
/// so no kept column is ever a normalized noise sliver.
void remove_directions(std::vector<Vec>& basis, std::span<const Vec> dirs) {
    for (Vec& u : basis)
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& d : dirs)
                vaxpy(-vdot(u, d), d, u);

    std::vector<Vec> kept;
    while (!basis.empty()) {
        std::size_t best = 0;
        double best_norm = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            double nn = vnorm(basis[i]);
            if (nn > best_norm) {
                best_norm = nn;
                best = i;
            }
        }
        if (best_norm <= 1e-3)
            break; // only collapsed dimensions remain
        Vec u = std::move(basis[best]);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(best));
        vscale(1.0 / best_norm, u);
        for (Vec& v : basis)
            vaxpy(-vdot(v, u), u, v);
        kept.push_back(std::move(u));
    }
    basis = std::move(kept);
}

struct Extraction {
    CanonicalBlock block;
    std::vector<Vec> columns; // 1 for PlusOne/MinusOne, 2 for Rotation
};

} // namespace

CanonicalOrthogonalForm orthogonal_canonical_form(const Matrix& q, const Tolerances& tol) {
    tol.validate();
    if (!q.is_square())
        throw DimensionMismatchError("orthogonal_canonical_form: matrix must be square");
    if (!is_orthogonal(q, tol))
        throw NotOrthogonalError();

    const std::size_t n = q.rows();
    // q commutes with its symmetric part, so the eigenspaces of (q + qᵀ)/2
    // are invariant planes/lines of q with eigenvalue cos(theta).
    SpectralDecomposition eig = symmetric_eig(0.5 * (q + transpose(q)), tol);

    std::vector<Extraction> extractions;
    std::size_t start = 0;
    while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && eig.lambda[stop - 1] - eig.lambda[stop] <= tol.pair_tol)
            ++stop;

        std::vector<Vec> basis;
        for (std::size_t i = start; i < stop; ++i) {
            auto r = eig.q.row(i);
            basis.emplace_back(r.begin(), r.end());
        }

        while (!basis.empty()) {
            Vec v = std::move(basis.front());
            basis.erase(basis.begin());
            vscale(1.0 / vnorm(v), v);

            Vec qv = matvec(q, v);
            double c = vdot(v, qv);
            Vec r = qv;
            vaxpy(-c, v, r);
            double snorm = vnorm(r);

            if (snorm <= tol.pair_tol) {
                BlockTag tag = c > 0.0 ? BlockTag::PlusOne : BlockTag::MinusOne;
                Vec dirs[] = {v};
                remove_directions(basis, dirs);
                extractions.push_back({{tag, 0.0}, {std::move(v)}});
            } else {
                vscale(1.0 / snorm, r);
                double theta = std::atan2(snorm, c); // in (0, pi) since snorm > 0
                Vec dirs[] = {v, r};
                remove_directions(basis, dirs);
                // Basis (v, -w) turns the restriction of q into [[c,s],[-s,c]].
                vscale(-1.0, r);
                extractions.push_back({{BlockTag::Rotation, theta}, {std::move(v), std::move(r)}});
            }
        }
        start = stop;
    }

    std::size_t dim = 0;
    for (const auto& e : extractions)
        dim += e.columns.size();
    if (dim != n)
        throw NotOrthogonalError("canonical decomposition lost dimensions; input too far from orthogonal");

    auto rank_of = [](BlockTag t) { return t == BlockTag::PlusOne ? 0 : t == BlockTag::MinusOne ? 1 : 2; };
    std::stable_sort(extractions.begin(), extractions.end(),
                     [&](const Extraction& x, const Extraction& y) {
                         if (rank_of(x.block.tag) != rank_of(y.block.tag))
                             return rank_of(x.block.tag) < rank_of(y.block.tag);
                         return x.block.theta < y.block.theta;
                     });

    CanonicalOrthogonalForm form{Matrix(n, n), {}};
    form.blocks.reserve(extractions.size());
    std::size_t col = 0;
    for (const auto& e : extractions) {
        form.blocks.push_back(e.block);
        for (const Vec& v : e.columns) {
            for (std::size_t i = 0; i < n; ++i)
                form.p(i, col) = v[i];
            ++col;
        }
    }
    // One Newton step toward the orthogonal polar factor wipes out the
    // rounding accumulated across extractions (error eps -> O(eps^2)) while
    // moving each column by no more than that same eps.
    form.p = 0.5 * (form.p * (3.0 * identity(n) - transpose(form.p) * form.p));
    return form;
}

} // namespace rootform
