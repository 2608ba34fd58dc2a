#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catmap/weil.hpp"

#include <cmath>
#include <numbers>

using namespace catmap;

namespace {

const CatMap kA{3, 2, 4, 3};

PrimeContext ctx_at(std::int64_t p) { return make_prime_context(kA, p); }

QuantumState random_state(const PrimeContext& ctx, Rng& rng) {
    QuantumState f = make_zero_state(ctx.p);
    for (auto& c : f.v)
        c = cplx{double(rng.below(2000)) / 1000.0 - 1.0, double(rng.below(2000)) / 1000.0 - 1.0};
    return f;
}

// All of SL2(F_p) by scanning (a, b, c) and solving for d.
std::vector<Sl2> all_sl2(std::int64_t p) {
    std::vector<Sl2> out;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c) {
                if (a != 0) {
                    out.push_back({a, b, c, mod_norm((1 + b * c) * mod_inv(a, p), p)});
                } else if (b != 0 && mod_norm(b * c, p) == p - 1) {
                    for (std::int64_t d = 0; d < p; ++d) out.push_back({a, b, c, d});
                }
            }
    return out;
}

} // namespace

// ===== states and inner product =====

TEST_CASE("inner_product on deltas and constants") {
    const PrimeContext ctx = ctx_at(5);
    const QuantumState d0 = make_delta(ctx, 0);
    const QuantumState d3 = make_delta(ctx, 3);
    CHECK(std::abs(inner_product(d0, d0) - cplx{0.2, 0.0}) < 1e-15); // 1/p
    CHECK(std::abs(inner_product(d0, d3)) < 1e-15);

    QuantumState ones = make_zero_state(5);
    for (auto& c : ones.v) c = 1.0;
    CHECK(std::abs(norm(ones) - 1.0) < 1e-15);

    const PrimeContext c7 = ctx_at(7);
    CHECK_THROWS_AS(inner_product(d0, make_delta(c7, 0)), ContextMismatch);
}

TEST_CASE("inner_product is conjugate symmetric") {
    const PrimeContext ctx = ctx_at(13);
    Rng rng(7);
    const QuantumState f = random_state(ctx, rng);
    const QuantumState g = random_state(ctx, rng);
    CHECK(std::abs(inner_product(f, g) - std::conj(inner_product(g, f))) < 1e-14);
}

// ===== generator actions =====

TEST_CASE("apply_upper multiplies deltas by psi(b i^2)") {
    const PrimeContext ctx = ctx_at(5);
    const QuantumState d2 = make_delta(ctx, 2);

    const QuantumState same = apply_upper(0, d2, ctx);
    CHECK(std::abs(same[2] - cplx{1.0, 0.0}) < 1e-15);

    const QuantumState g = apply_upper(3, d2, ctx);
    CHECK(std::abs(g[2] - additive_char(3 * 4, ctx)) < 1e-15);
    for (std::int64_t x = 0; x < 5; ++x)
        if (x != 2) CHECK(std::abs(g[x]) == 0.0);

    Rng rng(3);
    const QuantumState f = random_state(ctx, rng);
    CHECK(std::abs(norm(apply_upper(4, f, ctx)) - norm(f)) < 1e-13);
}

TEST_CASE("apply_diag permutes deltas with a Legendre sign") {
    const PrimeContext ctx = ctx_at(7);
    const QuantumState d3 = make_delta(ctx, 3);

    const QuantumState id = apply_diag(1, d3, ctx);
    CHECK(std::abs(id[3] - cplx{1.0, 0.0}) < 1e-15);

    // t = 2: delta_3 -> Lambda(2) delta_{3 * 2^-1} = delta_5 (2 is a square mod 7)
    const QuantumState g = apply_diag(2, d3, ctx);
    const std::int64_t target = mod_norm(3 * mod_inv(2, 7), 7);
    CHECK(target == 5);
    CHECK(std::abs(g[target] - cplx{double(legendre(2, 7)), 0.0}) < 1e-15);

    CHECK_THROWS_AS(apply_diag(0, d3, ctx), SingularGenerator);
    CHECK_THROWS_AS(apply_diag(7, d3, ctx), SingularGenerator);

    Rng rng(11);
    const QuantumState f = random_state(ctx, rng);
    CHECK(std::abs(norm(apply_diag(3, f, ctx)) - norm(f)) < 1e-13);
}

TEST_CASE("apply_fourier spreads a delta into a flat state") {
    const PrimeContext ctx = ctx_at(5);
    const QuantumState d0 = make_delta(ctx, 0);
    const QuantumState g = apply_fourier(d0, ctx);
    const cplx want = ctx.fourier_scalar / std::sqrt(5.0);
    for (std::int64_t x = 0; x < 5; ++x) CHECK(std::abs(g[x] - want) < 1e-14);

    Rng rng(5);
    const QuantumState f = random_state(ctx, rng);
    CHECK(std::abs(norm(apply_fourier(f, ctx)) - norm(f)) < 1e-12);
}

TEST_CASE("squared Fourier equals the parity operator, via a raw-angle oracle") {
    const PrimeContext ctx = ctx_at(5);
    const std::int64_t p = 5;

    // Oracle matrix built directly from the definition, no shared code paths.
    CMatrix w(p);
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const double ang = 2.0 * std::numbers::pi * double((2 * ctx.r * x * y) % p) / double(p);
            w.at(x, y) = ctx.fourier_scalar / std::sqrt(5.0) * cplx{std::cos(ang), std::sin(ang)};
        }
    const CMatrix w2 = matmul_serial(w, w);

    // U(w)^2 = U(-I): f(x) -> Lambda(-1) f(-x); Lambda(-1) = 1 at p = 5.
    CMatrix parity(p);
    for (std::int64_t x = 0; x < p; ++x) parity.at(x, mod_norm(-x, p)) = double(legendre(-1, p));
    CHECK(max_abs_diff(w2, parity) < 1e-12);

    // The library path agrees with the oracle.
    for (std::int64_t i = 0; i < p; ++i) {
        const QuantumState twice = apply_fourier(apply_fourier(make_delta(ctx, i), ctx), ctx);
        for (std::int64_t x = 0; x < p; ++x)
            CHECK(std::abs(twice[x] - w2.at(x, i)) < 1e-12);
    }
}

// ===== dense operators =====

TEST_CASE("build_unitary on generators matches the direct actions") {
    for (std::int64_t p : {3, 5, 13}) {
        const PrimeContext ctx = ctx_at(p);

        const LinearOperator ident = build_unitary(Sl2{1, 0, 0, 1}, ctx);
        CHECK(max_abs_diff(ident.m, CMatrix::identity(p)) == 0.0);

        const LinearOperator w = build_unitary(Sl2{0, 1, p - 1, 0}, ctx);
        for (std::int64_t i = 0; i < p; ++i) {
            const QuantumState col = apply_fourier(make_delta(ctx, i), ctx);
            for (std::int64_t x = 0; x < p; ++x)
                CHECK(std::abs(w.m.at(x, i) - col[x]) < 1e-13);
        }

        const LinearOperator upper = build_unitary(Sl2{1, 2, 0, 1}, ctx);
        for (std::int64_t i = 0; i < p; ++i) {
            const QuantumState col = apply_upper(2, make_delta(ctx, i), ctx);
            for (std::int64_t x = 0; x < p; ++x)
                CHECK(std::abs(upper.m.at(x, i) - col[x]) < 1e-13);
        }
    }
}

TEST_CASE("build_unitary depends on M mod p only") {
    const PrimeContext ctx = ctx_at(7);
    const Sl2 g{2, 3, 3, 5}; // det 10 - 9 = 1
    const LinearOperator u1 = build_unitary(g, ctx);
    const LinearOperator u2 = build_unitary(Sl2{2 + 7, 3, 3 + 14, 5 + 7}, ctx);
    CHECK(max_abs_diff(u1.m, u2.m) == 0.0);
}

TEST_CASE("build_unitary rejects non-unimodular input") {
    const PrimeContext ctx = ctx_at(5);
    CHECK_THROWS_AS(build_unitary(Sl2{1, 1, 1, 1}, ctx), NotSpecialLinear);
}

TEST_CASE("operators are unitary") {
    for (std::int64_t p : {3, 5, 7, 13, 17}) {
        const PrimeContext ctx = ctx_at(p);
        Rng rng(100 + p);
        for (int k = 0; k < 20; ++k) {
            const Sl2 m = random_sl2(rng, p);
            CHECK(unitarity_defect(build_unitary(m, ctx).m) < 1e-10 * double(p));
        }
    }
}

// ===== closed form vs Bruhat route =====

TEST_CASE("delta_action equals build_unitary columns, exhaustively for small p") {
    for (std::int64_t p : {3, 5, 7}) {
        const PrimeContext ctx = ctx_at(p);
        double worst = 0.0;
        for (const Sl2& m : all_sl2(p)) {
            if (m.c == 0) continue;
            const LinearOperator u = build_unitary(m, ctx);
            for (std::int64_t i = 0; i < p; ++i) {
                const QuantumState col = delta_action(m, i, ctx);
                for (std::int64_t x = 0; x < p; ++x)
                    worst = std::max(worst, std::abs(col[x] - u.m.at(x, i)));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("delta_action entries all have modulus p^{-1/2}") {
    const PrimeContext ctx = ctx_at(13);
    const QuantumState col = delta_action(sl2_reduce(kA, 13), 4, ctx);
    for (std::int64_t x = 0; x < 13; ++x)
        CHECK(std::abs(std::abs(col[x]) - 1.0 / std::sqrt(13.0)) < 1e-13);
}

TEST_CASE("delta_action refuses upper triangular input") {
    const PrimeContext ctx = ctx_at(5);
    CHECK_THROWS_AS(delta_action(Sl2{1, 2, 0, 1}, 0, ctx), UpperTriangularMatrix);
    CHECK_THROWS_AS(delta_action(Sl2{1, 1, 1, 1}, 0, ctx), NotSpecialLinear);
}

TEST_CASE("apply_sl2 agrees with the materialized operator") {
    const PrimeContext ctx = ctx_at(13);
    Rng rng(21);
    for (int k = 0; k < 10; ++k) {
        const Sl2 m = random_sl2(rng, 13);
        const QuantumState f = random_state(ctx, rng);
        const QuantumState via_op = apply(build_unitary(m, ctx), f);
        const QuantumState direct = apply_sl2(m, f, ctx);
        for (std::int64_t x = 0; x < 13; ++x)
            CHECK(std::abs(via_op[x] - direct[x]) < 1e-11);
    }
}

// ===== traces =====

TEST_CASE("trace facts") {
    for (std::int64_t p : {3, 5, 13}) {
        const PrimeContext ctx = ctx_at(p);
        CHECK(std::abs(trace_unitary(Sl2{1, 0, 0, 1}, ctx) - cplx{double(p), 0.0}) < 1e-9);
        CHECK(std::abs(std::abs(trace_unitary(Sl2{p - 1, 0, 0, p - 1}, ctx)) - 1.0) < 1e-9);

        Rng rng(500 + p);
        int done = 0;
        while (done < 50) {
            const Sl2 m = random_sl2(rng, p);
            if (m.c == 0 || mod_norm(m.a + m.d, p) == 2) continue;
            CHECK(std::abs(std::abs(trace_unitary(m, ctx)) - 1.0) < 1e-9);
            ++done;
        }
    }
}

// ===== multiplicativity =====

TEST_CASE("identity composition is exact") {
    const PrimeContext ctx = ctx_at(7);
    Rng rng(9);
    const Sl2 m = random_sl2(rng, 7);
    const LinearOperator u = build_unitary(m, ctx);
    const LinearOperator ui = build_unitary(Sl2{1, 0, 0, 1}, ctx);
    CHECK(max_abs_diff(matmul(ui.m, u.m), u.m) == 0.0);
}

TEST_CASE("inverse pairs compose to the identity") {
    const PrimeContext ctx = ctx_at(13);
    Rng rng(13);
    for (int k = 0; k < 5; ++k) {
        const Sl2 m = random_sl2(rng, 13);
        const LinearOperator u = build_unitary(m, ctx);
        const LinearOperator v = build_unitary(sl2_inv(m, 13), ctx);
        CHECK(max_abs_diff(matmul(u.m, v.m), CMatrix::identity(13)) < 1e-9);
    }
}

TEST_CASE("check_multiplicativity over seeded pairs") {
    for (std::int64_t p : {3, 5, 13})
        CHECK(check_multiplicativity(ctx_at(p), 25, 42) < 1e-9);
}
