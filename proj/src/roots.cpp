#include "rootform/roots.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "rootform/errors.hpp"
#include "rootform/families.hpp"
#include "rootform/jacobi.hpp"
#include "rootform/lu.hpp"
#include "rootform/predicates.hpp"
#include "internal/column_basis.hpp"

namespace rootform {
namespace {

std::vector<int> resolve_signs(const std::optional<std::vector<int>>& requested,
                               std::size_t count) {
    if (!requested)
        return std::vector<int>(count, 1);
    if (requested->size() != count)
        throw InvalidInput("SignCountMismatch",
                           "expected " + std::to_string(count) + " sign(s), got " +
                               std::to_string(requested->size()));
    for (int s : *requested)
        if (s != 1 && s != -1)
            throw InvalidInput("BadSign", "signs must be +1 or -1");
    return *requested;
}

std::vector<PsiParam> resolve_psi(const std::optional<std::vector<PsiParam>>& requested,
                                  std::size_t count) {
    if (!requested)
        return std::vector<PsiParam>(count);
    if (requested->size() != count)
        throw InvalidInput("PsiCountMismatch",
                           "expected " + std::to_string(count) + " psi parameter pair(s), got " +
                               std::to_string(requested->size()));
    for (const PsiParam& p : *requested)
        if (!(std::abs(p.b) >= kMinDenominator))
            throw DegenerateParametersError("psi parameter b must be non-zero");
    return *requested;
}

void place_block(Matrix& d, std::size_t offset, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            d(offset + i, offset + j) = block(i, j);
}

/// Tower level `level` of the canonical blocks: every angle divided by
/// 2^level, consecutive -1 blocks paired into rotations of pi / 2^level
/// (a -1 pair is a rotation by pi). The caller guarantees the -1 count is
/// even; block positions stay aligned with the conjugator's columns because
/// the canonical order keeps all -1 blocks adjacent.
std::vector<CanonicalBlock> halved_blocks(std::span<const CanonicalBlock> blocks,
                                          std::size_t level) {
    const double factor = std::ldexp(1.0, -static_cast<int>(level));
    std::vector<CanonicalBlock> out;
    out.reserve(blocks.size());
    bool minus_pending = false;
    for (const CanonicalBlock& blk : blocks) {
        switch (blk.tag) {
        case BlockTag::PlusOne:
            out.push_back(blk);
            break;
        case BlockTag::MinusOne:
            if (minus_pending)
                out.push_back({BlockTag::Rotation, std::numbers::pi * factor});
            minus_pending = !minus_pending;
            break;
        case BlockTag::Rotation:
            out.push_back({BlockTag::Rotation, blk.theta * factor});
            break;
        case BlockTag::Reflection:
            // The canonicalizer never emits reflections.
            throw NotOrthogonalError("unexpected reflection block in canonical form");
        }
    }
    return out;
}

} // namespace

const char* to_string(OrthogonalKind kind) {
    switch (kind) {
    case OrthogonalKind::InvolutoryOrthogonal: return "InvolutoryOrthogonal";
    case OrthogonalKind::HasRealOrthogonalRoot: return "HasRealOrthogonalRoot";
    case OrthogonalKind::NoRealRootConstruction: return "NoRealRootConstruction";
    }
    return "Unknown";
}

InvolutoryEigenbasis involutory_eigenbasis(const Matrix& a, const Tolerances& tol) {
    tol.validate();
    if (!is_involutory(a, tol))
        throw NotInvolutoryError();
    const std::size_t n = a.rows();

    // The spectral projectors onto the +1 and -1 eigenspaces. Their column
    // spaces are complementary, so the two bases concatenate to a full basis.
    const Matrix plus = 0.5 * (identity(n) + a);
    const Matrix minus = 0.5 * (identity(n) - a);
    const auto plus_basis = detail::column_basis(plus, tol.rank_tol, 1.0);
    const auto minus_basis = detail::column_basis(minus, tol.rank_tol, 1.0);
    if (plus_basis.size() + minus_basis.size() != n)
        throw NotInvolutoryError("eigenprojector ranks do not sum to the matrix order");

    Matrix b(n, n);
    std::size_t col = 0;
    for (const auto& v : plus_basis) {
        for (std::size_t i = 0; i < n; ++i)
            b(i, col) = v[i];
        ++col;
    }
    for (const auto& v : minus_basis) {
        for (std::size_t i = 0; i < n; ++i)
            b(i, col) = v[i];
        ++col;
    }
    return {std::move(b), plus_basis.size()};
}

Matrix involutory_real_root(const Matrix& a, const RootOptions& opts, const Tolerances& tol) {
    const InvolutoryEigenbasis basis = involutory_eigenbasis(a, tol);
    const std::size_t n = a.rows();
    const std::size_t positives = basis.positive_count;
    const std::size_t negatives = n - positives;
    if (negatives % 2 != 0)
        throw OddNegativeMultiplicityError(-1.0, negatives);

    const std::vector<int> signs = resolve_signs(opts.signs, positives);
    const std::vector<PsiParam> psis = resolve_psi(opts.psi_params, negatives / 2);

    // D squares to diag(1,...,1,-1,...,-1): signs on the identity part, one
    // Psi block (squaring to -I_2) per -1 pair.
    Matrix d(n, n);
    for (std::size_t i = 0; i < positives; ++i)
        d(i, i) = signs[i];
    for (std::size_t pair = 0; pair < psis.size(); ++pair)
        place_block(d, positives + 2 * pair, psi(psis[pair].a, psis[pair].b));

    const Matrix b_inv = lu_invert(basis.b, tol);
    return basis.b * d * b_inv;
}

Matrix symmetric_real_root(const Matrix& s, const RootOptions& opts, const Tolerances& tol) {
    const SpectralDecomposition eig = symmetric_eig(s, tol);
    const std::size_t n = s.rows();
    const double scale = frobenius_norm(s);
    const double neg_threshold = -tol.pair_tol * scale;

    // A negative eigenvalue indistinguishable from the negativity threshold
    // has an undecidable sign at this pair tolerance. Nonnegative eigenvalues
    // are never ambiguous: they clamp to zero at worst.
    for (double lambda : eig.lambda)
        if (lambda < 0.0 && std::abs(lambda - neg_threshold) <= tol.pair_tol)
            throw ClusterAmbiguousError(lambda);

    // Eigenvalues are sorted descending, so the negative ones form the tail.
    std::size_t nonneg = 0;
    while (nonneg < n && eig.lambda[nonneg] >= neg_threshold)
        ++nonneg;

    // Cluster the tail by gaps; every cluster must pair off evenly.
    const double gap = tol.pair_tol * scale;
    std::size_t pair_count = 0;
    for (std::size_t i = nonneg; i < n;) {
        std::size_t j = i + 1;
        while (j < n && eig.lambda[j - 1] - eig.lambda[j] <= gap)
            ++j;
        const std::size_t size = j - i;
        if (size % 2 != 0) {
            const double mean =
                std::accumulate(eig.lambda.begin() + static_cast<std::ptrdiff_t>(i),
                                eig.lambda.begin() + static_cast<std::ptrdiff_t>(j), 0.0) /
                static_cast<double>(size);
            throw OddNegativeMultiplicityError(mean, size);
        }
        pair_count += size / 2;
        i = j;
    }

    const std::vector<int> signs = resolve_signs(opts.signs, nonneg);
    const std::vector<PsiParam> psis = resolve_psi(opts.psi_params, pair_count);

    Matrix d(n, n);
    for (std::size_t i = 0; i < nonneg; ++i)
        d(i, i) = signs[i] * std::sqrt(std::max(eig.lambda[i], 0.0));
    std::size_t pair = 0;
    for (std::size_t i = nonneg; i < n; i += 2, ++pair) {
        const double mean = 0.5 * (eig.lambda[i] + eig.lambda[i + 1]);
        place_block(d, i, std::sqrt(-mean) * psi(psis[pair].a, psis[pair].b));
    }

    return transpose(eig.q) * d * eig.q;
}

Matrix orthogonal_real_root(const Matrix& q, const Tolerances& tol) {
    const CanonicalOrthogonalForm form = orthogonal_canonical_form(q, tol);
    const std::size_t minus = count_blocks(form.blocks, BlockTag::MinusOne);
    if (minus % 2 != 0)
        throw OddNegativeMultiplicityError(-1.0, minus);
    const Matrix d = blocks_direct_sum(halved_blocks(form.blocks, 1));
    return form.p * d * transpose(form.p);
}

RootTower root_tower(const Matrix& q, std::size_t depth, const Tolerances& tol) {
    if (depth < 1 || depth > kMaxTowerDepth)
        throw InvalidInput("DepthOutOfRange",
                           "tower depth must lie in [1, " + std::to_string(kMaxTowerDepth) + "]");
    const CanonicalOrthogonalForm form = orthogonal_canonical_form(q, tol);
    const std::size_t minus = count_blocks(form.blocks, BlockTag::MinusOne);
    if (minus % 2 != 0)
        throw OddNegativeMultiplicityError(-1.0, minus);

    RootTower tower{form.p, {}, depth};
    tower.dk.reserve(depth);
    for (std::size_t level = 1; level <= depth; ++level)
        tower.dk.push_back(blocks_direct_sum(halved_blocks(form.blocks, level)));
    return tower;
}

OrthogonalClassification classify_orthogonal(const Matrix& q, const Tolerances& tol) {
    const CanonicalOrthogonalForm form = orthogonal_canonical_form(q, tol);
    const bool eligible = count_blocks(form.blocks, BlockTag::MinusOne) % 2 == 0;
    OrthogonalKind kind;
    if (count_blocks(form.blocks, BlockTag::Rotation) == 0)
        kind = OrthogonalKind::InvolutoryOrthogonal;
    else if (eligible)
        kind = OrthogonalKind::HasRealOrthogonalRoot;
    else
        kind = OrthogonalKind::NoRealRootConstruction;
    return {kind, eligible};
}

} // namespace rootform
