#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rootform/errors.hpp"
#include "rootform/families.hpp"
#include "rootform/jacobi.hpp"
#include "rootform/matrix.hpp"
#include "rootform/predicates.hpp"

#include "support/generators.hpp"

using namespace rootform;

namespace {

void check_decomposition(const Matrix& s, const SpectralDecomposition& eig, double tol) {
    CHECK(is_orthogonal(eig.q, {}));
    CHECK(std::is_sorted(eig.lambda.rbegin(), eig.lambda.rend()));
    Matrix rebuilt = transpose(eig.q) * Matrix::diagonal(eig.lambda) * eig.q;
    CHECK(frobenius_norm(rebuilt - s) <= tol * (1.0 + frobenius_norm(s)));
}

} // namespace

TEST_CASE("already-diagonal input") {
    Matrix s{{2, 0}, {0, 1}};
    SpectralDecomposition eig = symmetric_eig(s, {});
    CHECK(eig.lambda[0] == doctest::Approx(2.0));
    CHECK(eig.lambda[1] == doctest::Approx(1.0));
    check_decomposition(s, eig, 1e-12);
}

TEST_CASE("swap matrix has eigenvalues +-1") {
    SpectralDecomposition eig = symmetric_eig(Matrix{{0, 1}, {1, 0}}, {});
    CHECK(eig.lambda[0] == doctest::Approx(1.0));
    CHECK(eig.lambda[1] == doctest::Approx(-1.0));
}

TEST_CASE("order one") {
    SpectralDecomposition eig = symmetric_eig(Matrix{{-3.5}}, {});
    CHECK(eig.lambda[0] == doctest::Approx(-3.5));
    CHECK(eig.q(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("construct-then-decompose recovers the spectrum") {
    Rng rng{Seed{77}};
    for (std::size_t n : {2, 3, 5, 8, 13, 16}) {
        // Prescribe a spectrum, rotate it away, decompose, compare.
        std::vector<double> lambda(n);
        for (std::size_t i = 0; i < n; ++i)
            lambda[i] = rng.uniform(-5.0, 5.0);
        std::sort(lambda.rbegin(), lambda.rend());
        Matrix q = sample_orthogonal(n, rng);
        Matrix s = transpose(q) * Matrix::diagonal(lambda) * q;

        SpectralDecomposition eig = symmetric_eig(s, {});
        REQUIRE(eig.lambda.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(eig.lambda[i] - lambda[i]) <= 1e-8 * (1.0 + std::abs(lambda[i])));
        check_decomposition(s, eig, 1e-10);
    }
}

TEST_CASE("repeated eigenvalues are handled") {
    Rng rng{Seed{78}};
    std::vector<double> lambda{3.0, 3.0, 3.0, -2.0, -2.0};
    Matrix q = sample_orthogonal(5, rng);
    Matrix s = transpose(q) * Matrix::diagonal(lambda) * q;
    SpectralDecomposition eig = symmetric_eig(s, {});
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(eig.lambda[i] - lambda[i]) <= 1e-9);
    check_decomposition(s, eig, 1e-10);
}

TEST_CASE("larger seeded instances converge inside the sweep cap") {
    Rng rng{Seed{79}};
    for (std::size_t n : {24, 48, 64}) {
        Matrix raw = testgen::random_entries(n, n, rng);
        Matrix s = 0.5 * (raw + transpose(raw));
        SpectralDecomposition eig = symmetric_eig(s, {});
        check_decomposition(s, eig, 1e-9);
    }
}

TEST_CASE("asymmetric input is rejected") {
    CHECK_THROWS_AS(symmetric_eig(Matrix{{0, 1}, {0, 0}}, {}), NotSymmetricError);
    CHECK_THROWS_AS(symmetric_eig(Matrix(2, 3), {}), Error);
}

TEST_CASE("tiny asymmetry within tolerance is symmetrized, not rejected") {
    Matrix s{{1.0, 2.0}, {2.0 + 1e-13, 1.0}};
    SpectralDecomposition eig = symmetric_eig(s, {});
    CHECK(eig.lambda[0] == doctest::Approx(3.0));
    CHECK(eig.lambda[1] == doctest::Approx(-1.0));
}
