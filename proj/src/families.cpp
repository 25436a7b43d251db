#include "rootform/families.hpp"

#include <cmath>

#include "rootform/errors.hpp"
#include "rootform/kernels.hpp"

namespace rootform {

namespace {

void require_finite_angle(double theta) {
    if (!std::isfinite(theta))
        throw InvalidInput("NonFiniteEntry", "angle must be finite");
}

int validated_sign(int s) {
    if (s != 1 && s != -1)
        throw InvalidInput("BadSign", "sign parameter must be +1 or -1");
    return s;
}

} // namespace

Matrix involutory_2x2(const InvolutoryParam& p) {
    return std::visit(
        [](const auto& v) -> Matrix {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GeneralInvolutory>) {
                if (std::abs(v.b) < kMinDenominator)
                    throw DegenerateParametersError("involutory_2x2: General branch needs b != 0");
                return Matrix{{v.a, v.b}, {(1.0 - v.a * v.a) / v.b, -v.a}};
            } else if constexpr (std::is_same_v<T, LowerTriangularInvolutory>) {
                double s = validated_sign(v.sign);
                return Matrix{{s, 0.0}, {v.c, -s}};
            } else {
                double s = validated_sign(v.sign);
                return Matrix{{s, 0.0}, {0.0, s}};
            }
        },
        p);
}

Matrix psi(double a, double b) {
    if (std::abs(b) < kMinDenominator)
        throw DegenerateParametersError("psi: b must be nonzero");
    return Matrix{{a, -b}, {(1.0 + a * a) / b, -a}};
}

Matrix rotation(double theta) {
    require_finite_angle(theta);
    double c = std::cos(theta), s = std::sin(theta);
    return Matrix{{c, s}, {-s, c}};
}

Matrix reflection(double theta) {
    require_finite_angle(theta);
    double c = std::cos(theta), s = std::sin(theta);
    return Matrix{{c, s}, {s, -c}};
}

Matrix sample_involutory_2x2(Seed seed) {
    Rng rng(seed);
    double a = rng.uniform(-10.0, 10.0);
    double b = rng.sign() * rng.uniform(1e-3, 10.0);
    return involutory_2x2(GeneralInvolutory{a, b});
}

Matrix sample_orthogonal(std::size_t n, Rng& rng) {
    if (n == 0)
        throw InvalidInput("BadDimensions", "sample_orthogonal: n must be positive");
    Matrix q = identity(n);
    const auto& kern = kernels::active();
    if (n >= 2) {
        for (std::size_t r = 0; r < 3 * n; ++r) {
            std::size_t i = rng.index(n);
            std::size_t j = rng.index(n - 1);
            if (j >= i)
                ++j;
            double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            kern.rot(q.row(i).data(), q.row(j).data(), n, std::cos(theta), std::sin(theta));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (rng.sign() < 0)
            kern.scal(-1.0, q.row(i).data(), n);
    return q;
}

Matrix sample_orthogonal(std::size_t n, Seed seed) {
    Rng rng(seed);
    return sample_orthogonal(n, rng);
}

Matrix sample_symmetric_paired(std::size_t n, std::size_t num_negative_pairs, Seed seed) {
    if (n == 0)
        throw InvalidInput("BadDimensions", "sample_symmetric_paired: n must be positive");
    if (2 * num_negative_pairs > n)
        throw InvalidInput("BadDimensions",
                           "sample_symmetric_paired: 2*num_negative_pairs must not exceed n");
    Rng rng(seed);
    std::vector<double> lambda;
    lambda.reserve(n);
    for (std::size_t i = 0; i < n - 2 * num_negative_pairs; ++i)
        lambda.push_back(rng.uniform(0.5, 4.0));
    for (std::size_t i = 0; i < num_negative_pairs; ++i) {
        double mu = rng.uniform(0.5, 4.0);
        lambda.push_back(-mu);
        lambda.push_back(-mu);
    }
    Matrix q = sample_orthogonal(n, rng);
    return matmul(transpose(q), matmul(Matrix::diagonal(lambda), q));
}

} // namespace rootform
