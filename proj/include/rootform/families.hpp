#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "rootform/matrix.hpp"

namespace rootform {

/// Seed for all deterministic sampling.
struct Seed {
    std::uint64_t value = 0;
};

/// Deterministic RNG: mt19937_64 raw output only, so streams are identical
/// on every platform (std distributions are not pinned by the standard).
class Rng {
public:
    explicit Rng(Seed seed) : gen_(seed.value) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [lo, hi), 53-bit resolution.
    double uniform(double lo, double hi) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

    int sign() { return (next_u64() & 1u) ? 1 : -1; }

private:
    std::mt19937_64 gen_;
};

// The three branches of the order-2 involutory family. The general branch is
// a genuine two-parameter family with a singularity at b = 0; the other two
// are its limits and are kept as separate cases.
struct GeneralInvolutory {
    double a;
    double b; // nonzero
};
struct LowerTriangularInvolutory {
    int sign; // +1 or -1, the (0,0) entry
    double c;
};
struct ScalarInvolutory {
    int sign; // +1 or -1
};
using InvolutoryParam = std::variant<GeneralInvolutory, LowerTriangularInvolutory, ScalarInvolutory>;

/// Denominators smaller than this would blow entries past usable range.
inline constexpr double kMinDenominator = 1e-12;

/// [[a, b], [(1-a^2)/b, -a]], [[s, 0], [c, -s]] or s*I; squares to I exactly
/// in exact arithmetic.
Matrix involutory_2x2(const InvolutoryParam& p);

/// Psi(a, b) = [[a, -b], [(1+a^2)/b, -a]]; squares to -I.
Matrix psi(double a, double b);

/// [[cos t, sin t], [-sin t, cos t]].
Matrix rotation(double theta);

/// [[cos t, sin t], [sin t, -cos t]]: symmetric, orthogonal, involutory, det -1.
Matrix reflection(double theta);

/// Seeded General(a, b) member, a in [-10, 10], |b| in [1e-3, 10].
Matrix sample_involutory_2x2(Seed seed);

/// Product of seeded plane rotations and row sign flips; orthogonal with
/// det +1 or -1.
Matrix sample_orthogonal(std::size_t n, Seed seed);
Matrix sample_orthogonal(std::size_t n, Rng& rng);

/// Symmetric matrix Qᵀ·diag(lambda)·Q whose negative eigenvalues all come in
/// duplicated pairs; positive spectrum in [0.5, 4], negative in [-4, -0.5].
Matrix sample_symmetric_paired(std::size_t n, std::size_t num_negative_pairs, Seed seed);

} // namespace rootform
