#pragma once

#include <span>
#include <vector>

#include "rootform/matrix.hpp"
#include "rootform/tolerances.hpp"

namespace rootform {

/// Order-<=2 block of the real orthogonal canonical form. Rotation carries an
/// angle in (0, pi); Reflection exists for generators and classification only:
/// the canonicalizer always splits a reflection plane into PlusOne + MinusOne,
/// which keeps every multiplicity count a plain block tally.
enum class BlockTag { PlusOne, MinusOne, Rotation, Reflection };

struct CanonicalBlock {
    BlockTag tag;
    double theta = 0.0; // radians; meaningful for Rotation and Reflection

    bool operator==(const CanonicalBlock&) const = default;
};

/// The block matrix itself: [1], [-1], [[c,s],[-s,c]] or [[c,s],[s,-c]].
Matrix block_matrix(const CanonicalBlock& block);

Matrix blocks_direct_sum(std::span<const CanonicalBlock> blocks);

std::size_t count_blocks(std::span<const CanonicalBlock> blocks, BlockTag tag);

/// Orthogonal similarity q = p · direct_sum(blocks) · pᵀ with blocks ordered
/// as: all PlusOne, all MinusOne, rotations by ascending angle.
struct CanonicalOrthogonalForm {
    Matrix p;
    std::vector<CanonicalBlock> blocks;
};

/// Block-diagonalize a real orthogonal matrix over the reals.
///
/// The eigenspaces of the symmetric part (q + qᵀ)/2 are q-invariant; each
/// eigenvalue cos(theta) cluster (clustered by pair_tol) decomposes into
/// fixed vectors (PlusOne), flipped vectors (MinusOne) and rotation planes.
/// A plane is spanned by an eigenvector v together with the normalized
/// component of q·v orthogonal to v, oriented so the restriction is a
/// rotation by theta in (0, pi).
CanonicalOrthogonalForm orthogonal_canonical_form(const Matrix& q, const Tolerances& tol = {});

} // namespace rootform
