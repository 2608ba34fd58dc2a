#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catmap/linalg.hpp"

#include <cmath>

using namespace catmap;

namespace {

CMatrix random_matrix(std::int64_t n, Rng& rng) {
    CMatrix m(n);
    for (auto& z : m.d)
        z = cplx{double(rng.below(2000)) / 1000.0 - 1.0, double(rng.below(2000)) / 1000.0 - 1.0};
    return m;
}

CMatrix dft(std::int64_t n) {
    CMatrix f(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y) f.at(x, y) = unit_root(x * y, n) * s;
    return f;
}

} // namespace

TEST_CASE("parallel kernels agree bitwise with the serial references") {
    Rng rng(3);
    for (std::int64_t n : {1, 17, 64}) {
        CAPTURE(n);
        const CMatrix a = random_matrix(n, rng);
        const CMatrix b = random_matrix(n, rng);
        CHECK(max_abs_diff(matmul(a, b), matmul_serial(a, b)) == 0.0);

        std::vector<cplx> x(static_cast<std::size_t>(n));
        for (auto& z : x)
            z = cplx{double(rng.below(2000)) / 1000.0 - 1.0,
                     double(rng.below(2000)) / 1000.0 - 1.0};
        const auto y_par = matvec(a, x);
        const auto y_ser = matvec_serial(a, x);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(y_par[i] == y_ser[i]);
    }
}

TEST_CASE("dimension mismatches throw") {
    CHECK_THROWS_AS(matmul(CMatrix(2), CMatrix(3)), Error);
    CHECK_THROWS_AS(matvec(CMatrix(2), std::vector<cplx>(3)), Error);
    CHECK_THROWS_AS(max_abs_diff(CMatrix(2), CMatrix(3)), Error);
}

TEST_CASE("adjoint trace and frobenius identities") {
    Rng rng(5);
    const CMatrix a = random_matrix(9, rng);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
    CHECK(trace(CMatrix::identity(7)) == cplx{7.0, 0.0});

    const double f = frobenius_norm(a);
    const cplx t = trace(matmul(adjoint(a), a));
    CHECK(std::abs(f * f - t.real()) < 1e-10);
    CHECK(std::abs(t.imag()) < 1e-12);
}

TEST_CASE("unitarity defect separates unitary from non-unitary") {
    CHECK(unitarity_defect(CMatrix::identity(6)) == 0.0);
    CHECK(unitarity_defect(dft(8)) < 1e-12);

    CMatrix two = CMatrix::identity(4);
    for (auto& z : two.d) z *= 2.0;
    CHECK(unitarity_defect(two) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("largest singular value matches known spectra") {
    CMatrix diag(3);
    diag.at(0, 0) = 3.0;
    diag.at(1, 1) = 1.0;
    diag.at(2, 2) = 0.5;
    CHECK(largest_singular_value(diag) == doctest::Approx(3.0).epsilon(1e-9));

    CHECK(largest_singular_value(dft(16)) == doctest::Approx(1.0).epsilon(1e-9));

    // Rank one u v*: the only singular value is |u| |v|.
    CMatrix r1(2);
    r1.at(0, 0) = 2.0;
    r1.at(0, 1) = 1.0;
    r1.at(1, 0) = 4.0;
    r1.at(1, 1) = 2.0;
    CHECK(largest_singular_value(r1) == doctest::Approx(5.0).epsilon(1e-9));

    CHECK(largest_singular_value(CMatrix(0)) == 0.0);
}
