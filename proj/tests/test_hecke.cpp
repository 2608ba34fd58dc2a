#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catmap/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace catmap;

namespace {

const CatMap kA{3, 2, 4, 3};              // inert at 3, 5, 13; split at 7, 23
const CatMap kRamUt{5, 4, 6, 5};          // ramified at 3, upper triangular
const CatMap kRamGen{1, 4, 2, 9};         // ramified at 3, not upper triangular
const CatMap kSplitUt{3, 2, 10, 7};       // split at 5, upper triangular

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

std::int64_t pack(const Sl2& m, std::int64_t p) {
    return ((m.a * p + m.b) * p + m.c) * p + m.d;
}

std::set<std::int64_t> pack_all(const std::vector<HeckeElement>& es, std::int64_t p) {
    std::set<std::int64_t> out;
    for (const auto& e : es) out.insert(pack(e.mat, p));
    return out;
}

// Independent description of the centralizer: the unimodular elements of the
// polynomial algebra F_p[A], valid whenever A is not scalar mod p.
std::set<std::int64_t> unimodular_polynomials(const CatMap& A, std::int64_t p) {
    const Sl2 a = sl2_reduce(A, p);
    std::set<std::int64_t> out;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const Sl2 m = sl2_reduce(x + y * a.a, y * a.b, y * a.c, x + y * a.d, p);
            if (mod_norm(m.a * m.d - m.b * m.c, p) == 1) out.insert(pack(m, p));
        }
    return out;
}

Sl2 conjugated_form(const CatMap& A, const PrimeContext& ctx) {
    const Sl2 M = find_conjugator(A, ctx);
    return sl2_mul(sl2_mul(sl2_inv(M, ctx.p), sl2_reduce(A, ctx.p), ctx.p), M, ctx.p);
}

double gram_defect(const std::vector<QuantumState>& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const cplx g = inner_product(basis[i], basis[j]);
            worst = std::max(worst, std::abs(g - (i == j ? cplx{1.0} : cplx{0.0})));
        }
    return worst;
}

std::vector<QuantumState> collect_basis(const std::vector<EigenspaceResult>& spaces) {
    std::vector<QuantumState> all;
    for (const auto& sp : spaces)
        for (const auto& b : sp.basis) all.push_back(b);
    return all;
}

} // namespace

TEST_CASE("find_conjugator reaches the torus normal form") {
    SUBCASE("inert primes") {
        for (const std::int64_t p : {3, 5, 13}) {
            const PrimeContext ctx = make_prime_context(kA, p);
            REQUIRE(ctx.kind == PrimeKind::Inert);
            const std::int64_t D = find_nonsquare(p);
            const Sl2 n = conjugated_form(kA, ctx);
            CHECK(n.a == n.d);
            CHECK(n.b == mod_mul(D, n.c, p));
            CHECK(n.c != 0);
        }
    }
    SUBCASE("split primes") {
        const PrimeContext ctx7 = make_prime_context(kA, 7);
        REQUIRE(ctx7.kind == PrimeKind::Split);
        const Sl2 n7 = conjugated_form(kA, ctx7);
        CHECK(n7.b == 0);
        CHECK(n7.c == 0);
        CHECK(mod_norm(n7.a * n7.d, 7) == 1);
        CHECK(n7.a != n7.d);

        const PrimeContext ctx5 = make_prime_context(kSplitUt, 5);
        REQUIRE(ctx5.kind == PrimeKind::Split);
        REQUIRE(ctx5.upper_triangular);
        const Sl2 M = find_conjugator(kSplitUt, ctx5);
        CHECK(M.c == 0); // a triangular map keeps a triangular conjugator
        const Sl2 n5 = conjugated_form(kSplitUt, ctx5);
        CHECK(n5.b == 0);
        CHECK(n5.c == 0);
    }
    SUBCASE("ramified primes") {
        const PrimeContext ctx = make_prime_context(kRamGen, 3);
        REQUIRE(ctx.kind == PrimeKind::Ramified);
        const Sl2 n = conjugated_form(kRamGen, ctx);
        CHECK(n.c == 0);
        CHECK(n.a == n.d);
        CHECK((n.a == 1 || n.a == 2));
        CHECK(n.b != 0);

        const PrimeContext ctxu = make_prime_context(kRamUt, 3);
        REQUIRE(ctxu.upper_triangular);
        CHECK(find_conjugator(kRamUt, ctxu) == Sl2{});
    }
    SUBCASE("scalar reduction has no normal form") {
        const CatMap scalar{37, 6, 6, 1}; // congruent to I mod 3, ramified there
        const PrimeContext ctx = make_prime_context(scalar, 3);
        REQUIRE(ctx.kind == PrimeKind::Ramified);
        CHECK_THROWS_AS(find_conjugator(scalar, ctx), ConjugatorNotFound);
    }
    SUBCASE("context built for another matrix is rejected") {
        const PrimeContext ctx = make_prime_context(kA, 7);
        CHECK_THROWS_AS(find_conjugator(kRamGen, ctx), ContextMismatch);
    }
}

TEST_CASE("centralizer matches the brute-force commutant of SL2(F_p)") {
    const auto check = [](const CatMap& A, std::int64_t p, std::int64_t expected_order) {
        const PrimeContext ctx = make_prime_context(A, p);
        const HeckeGroup G = centralizer(A, ctx);
        REQUIRE(G.order() == expected_order);

        const Sl2 a = sl2_reduce(A, p);
        std::set<std::int64_t> brute;
        for (const Sl2& m : all_sl2(p))
            if (sl2_mul(m, a, p) == sl2_mul(a, m, p)) brute.insert(pack(m, p));
        CHECK(brute == pack_all(G.elements, p));
        CHECK(brute == unimodular_polynomials(A, p));
    };
    check(kA, 3, 4);        // inert: p + 1
    check(kRamGen, 3, 6);   // ramified: 2p
    check(kA, 7, 6);        // split: p - 1
}

TEST_CASE("centralizer equals the unimodular polynomials in A") {
    const auto check = [](const CatMap& A, std::int64_t p) {
        const HeckeGroup G = centralizer(A, make_prime_context(A, p));
        CHECK(pack_all(G.elements, p) == unimodular_polynomials(A, p));
    };
    check(kA, 5);
    check(kA, 13);
    check(kSplitUt, 5);
    check(kRamUt, 3);
}

TEST_CASE("centralizer bookkeeping: identity first, faithful parameters") {
    SUBCASE("inert") {
        const HeckeGroup G = centralizer(kA, make_prime_context(kA, 5));
        REQUIRE(G.order() == 6);
        CHECK(G.elements[0].mat == Sl2{});
        CHECK(G.dlog[0] == 0);
        CHECK(G.elements[1].p1 == -1);          // the point at infinity
        CHECK(G.dlog[1] == (5 + 1) / 2);        // it maps to -1 in the torus
        std::set<std::int64_t> dlogs(G.dlog.begin(), G.dlog.end());
        CHECK(dlogs.size() == 6);               // dlog is a bijection onto Z/(p+1)
    }
    SUBCASE("split") {
        const HeckeGroup G = centralizer(kA, make_prime_context(kA, 7));
        REQUIRE(G.order() == 6);
        CHECK(G.elements[0].mat == Sl2{});
        CHECK(G.prim_root == 3);
        for (std::int64_t s = 1; s < 7; ++s) CHECK(G.elements[s - 1].p1 == s);
        std::set<std::int64_t> dlogs(G.dlog.begin(), G.dlog.end());
        CHECK(dlogs.size() == 6);
    }
    SUBCASE("ramified") {
        const HeckeGroup G = centralizer(kRamGen, make_prime_context(kRamGen, 3));
        REQUIRE(G.order() == 6);
        CHECK(G.elements[0].mat == Sl2{});
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(G.elements[i].p1 == 1);
            CHECK(G.elements[i + 3].p1 == -1);
            CHECK(G.elements[i].p2 == std::int64_t(i));
        }
    }
}

TEST_CASE("characters form the dual group") {
    const auto check = [](const CatMap& A, std::int64_t p) {
        const HeckeGroup G = centralizer(A, make_prime_context(A, p));
        const auto chars = characters(G);
        const std::int64_t n = G.order();
        REQUIRE(std::int64_t(chars.size()) == n);

        for (const auto& nu : chars) {
            REQUIRE(std::int64_t(nu.values.size()) == n);
            CHECK(std::abs(nu.values[0] - cplx{1.0}) < 1e-12); // identity element
            for (const cplx& v : nu.values) CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        }
        for (const cplx& v : chars[0].values) CHECK(std::abs(v - cplx{1.0}) < 1e-12);

        // homomorphism on every pair of group elements
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j) {
                const std::int64_t k =
                    G.index_of(sl2_mul(G.elements[i].mat, G.elements[j].mat, p));
                for (const auto& nu : chars)
                    CHECK(std::abs(nu.values[k] - nu.values[i] * nu.values[j]) < 1e-12);
            }

        // row orthogonality
        for (std::size_t k = 0; k < chars.size(); ++k)
            for (std::size_t l = 0; l < chars.size(); ++l) {
                cplx s = 0.0;
                for (std::int64_t i = 0; i < n; ++i)
                    s += chars[k].values[i] * std::conj(chars[l].values[i]);
                const cplx want = (k == l) ? cplx{double(n)} : cplx{0.0};
                CHECK(std::abs(s - want) < 1e-9);
            }
    };
    check(kA, 3);       // inert
    check(kA, 7);       // split
    check(kRamGen, 3);  // ramified
}

TEST_CASE("hecke_operator accepts exactly the centralizer") {
    const PrimeContext ctx = make_prime_context(kA, 5);
    const HeckeGroup G = centralizer(kA, ctx);
    const LinearOperator UA = build_unitary(kA, ctx);
    for (const auto& e : G.elements) {
        const LinearOperator UB = hecke_operator(G, e.mat);
        CHECK(max_abs_diff(matmul(UA.m, UB.m), matmul(UB.m, UA.m)) < 1e-10);
    }
    CHECK_THROWS_AS(hecke_operator(G, Sl2{1, 1, 0, 1}), NotInGroup);
}

TEST_CASE("projector matrix columns are the projected deltas") {
    // projector_matrix assembles columns from the closed-form delta action;
    // project runs the generator factorization.  The two routes must agree.
    const auto check = [](const CatMap& A, std::int64_t p, std::size_t char_idx) {
        const PrimeContext ctx = make_prime_context(A, p);
        const HeckeGroup G = centralizer(A, ctx);
        const auto chars = characters(G);
        const LinearOperator P = projector_matrix(G, chars[char_idx]);
        for (std::int64_t i = 0; i < p; ++i) {
            const QuantumState q = project(G, chars[char_idx], make_delta(ctx, i));
            for (std::int64_t x = 0; x < p; ++x)
                CHECK(std::abs(P.m.at(x, i) - q[x]) < 1e-12);
        }
    };
    check(kA, 5, 1);
    check(kA, 7, 3);
    check(kRamGen, 3, 4);
    check(kRamUt, 3, 2);
}

TEST_CASE("projectors are orthogonal idempotents resolving the identity") {
    const PrimeContext ctx = make_prime_context(kA, 7);
    const HeckeGroup G = centralizer(kA, ctx);
    const auto chars = characters(G);
    const LinearOperator UA = build_unitary(kA, ctx);

    std::vector<CMatrix> ps;
    for (const auto& nu : chars) ps.push_back(projector_matrix(G, nu).m);

    CMatrix sum(7);
    for (std::size_t k = 0; k < ps.size(); ++k) {
        CHECK(max_abs_diff(matmul(ps[k], ps[k]), ps[k]) < 1e-10);
        CHECK(max_abs_diff(adjoint(ps[k]), ps[k]) < 1e-10);
        CHECK(max_abs_diff(matmul(UA.m, ps[k]), matmul(ps[k], UA.m)) < 1e-10);
        for (std::size_t l = 0; l < ps.size(); ++l) {
            if (k == l) continue;
            const CMatrix prod = matmul(ps[k], ps[l]);
            CHECK(frobenius_norm(prod) < 1e-10);
        }
        for (std::int64_t x = 0; x < 7; ++x)
            for (std::int64_t y = 0; y < 7; ++y) sum.at(x, y) += ps[k].at(x, y);
    }
    CHECK(max_abs_diff(sum, CMatrix::identity(7)) < 1e-10);
}

TEST_CASE("norm of a projected delta is the diagonal projector entry") {
    const auto check = [](const CatMap& A, std::int64_t p, std::size_t char_idx) {
        const PrimeContext ctx = make_prime_context(A, p);
        const HeckeGroup G = centralizer(A, ctx);
        const auto chars = characters(G);
        const LinearOperator P = projector_matrix(G, chars[char_idx]);
        for (std::int64_t i = 0; i < p; ++i) {
            const QuantumState q = project(G, chars[char_idx], make_delta(ctx, i));
            const double n2 = std::real(inner_product(q, q));
            const cplx diag = P.m.at(i, i) / double(p);
            CHECK(std::abs(diag - cplx{n2}) < 1e-12);
        }
    };
    check(kA, 5, 2);
    check(kA, 7, 1);
    check(kRamGen, 3, 1);
}

TEST_CASE("eigenspace dimensions account for the whole space") {
    SUBCASE("inert: one empty character, the rest lines") {
        for (const std::int64_t p : {5, 13}) {
            const PrimeContext ctx = make_prime_context(kA, p);
            const auto spaces = eigenbasis(kA, ctx);
            REQUIRE(std::int64_t(spaces.size()) == p + 1);
            std::int64_t total = 0, zeros = 0;
            for (const auto& sp : spaces) {
                total += sp.dimension;
                zeros += (sp.dimension == 0);
                CHECK(sp.dimension <= 1);
            }
            CHECK(total == p);
            CHECK(zeros == 1);
            CHECK(gram_defect(collect_basis(spaces)) < 1e-9);
        }
    }
    SUBCASE("split: the Legendre character carries a plane") {
        const PrimeContext ctx = make_prime_context(kA, 7);
        const auto spaces = eigenbasis(kA, ctx);
        REQUIRE(spaces.size() == 6);
        std::int64_t total = 0;
        for (const auto& sp : spaces) total += sp.dimension;
        CHECK(total == 7);
        CHECK(spaces[3].dimension == 2); // k0 = (p - 1) / 2
        for (std::size_t k = 0; k < 6; ++k)
            if (k != 3) CHECK(spaces[k].dimension == 1);
        CHECK(gram_defect(collect_basis(spaces)) < 1e-9);
    }
    SUBCASE("ramified: p lines and p empty characters") {
        const PrimeContext ctx = make_prime_context(kRamGen, 3);
        const auto spaces = eigenbasis(kRamGen, ctx);
        REQUIRE(spaces.size() == 6);
        std::int64_t total = 0, zeros = 0;
        for (const auto& sp : spaces) {
            total += sp.dimension;
            zeros += (sp.dimension == 0);
        }
        CHECK(total == 3);
        CHECK(zeros == 3);
        CHECK(gram_defect(collect_basis(spaces)) < 1e-9);
    }
}

TEST_CASE("eigenbasis vectors are joint eigenfunctions with the right eigenvalues") {
    const auto check = [](const CatMap& A, std::int64_t p) {
        const PrimeContext ctx = make_prime_context(A, p);
        const HeckeGroup G = centralizer(A, ctx);
        const auto chars = characters(G);
        const std::int64_t ia = G.index_of(sl2_reduce(A, p));
        for (const auto& sp : eigenbasis(A, ctx)) {
            const HeckeCharacter& nu = chars[std::size_t(sp.character.index)];
            for (const auto& b : sp.basis) {
                CHECK(eigen_deviation(G, nu, b) < 1e-9);
                // in particular an eigenfunction of the quantized map itself
                const QuantumState ub = apply_sl2(sl2_reduce(A, p), b, ctx);
                double dev = 0.0;
                for (std::int64_t x = 0; x < p; ++x)
                    dev = std::max(dev, std::abs(ub[x] - nu.values[ia] * b[x]));
                CHECK(dev < 1e-9);
                // phase convention: leading coordinate positive real
                for (std::int64_t x = 0; x < p; ++x)
                    if (std::abs(b[x]) > 1e-8) {
                        CHECK(std::abs(std::imag(b[x])) < 1e-10);
                        CHECK(std::real(b[x]) > 0.0);
                        break;
                    }
            }
        }
    };
    check(kA, 5);
    check(kA, 7);
    check(kRamGen, 3);
}

TEST_CASE("inert eigenfunctions meet the uniform sup bound") {
    for (const std::int64_t p : {3, 5, 13}) {
        const PrimeContext ctx = make_prime_context(kA, p);
        REQUIRE(ctx.kind == PrimeKind::Inert);
        const double bound = 2.0 / std::sqrt(1.0 + 1.0 / double(p));
        for (const auto& sp : eigenbasis(kA, ctx))
            for (const double s : sp.sup_norms) CHECK(s <= bound + 1e-9);
    }
}

TEST_CASE("ramified closed form") {
    const PrimeContext ctx = make_prime_context(kRamGen, 3);
    const HeckeGroup G = centralizer(kRamGen, ctx);
    const auto cf = ramified_closed_form(kRamGen, ctx);
    REQUIRE(cf.size() == 3); // phi_0, phi_1^+, phi_1^-

    SUBCASE("states are orthonormal joint eigenfunctions") {
        CHECK(gram_defect(collect_basis(cf)) < 1e-10);
        std::set<std::int64_t> idx;
        for (const auto& sp : cf) {
            REQUIRE(sp.dimension == 1);
            idx.insert(sp.character.index);
            CHECK(eigen_deviation(G, sp.character, sp.basis[0]) < 1e-9);
        }
        CHECK(idx.size() == 3);
    }
    SUBCASE("spans agree with the projector route") {
        for (const auto& sp : cf) {
            const EigenspaceResult es = eigenspace(G, sp.character);
            REQUIRE(es.dimension == 1);
            CHECK(subspace_distance(sp.basis, es.basis) < 1e-8);
        }
    }
    SUBCASE("sup norms: flat, doubled, and the cosine defect") {
        // For a non-triangular conjugator the columns of U(M) are flat, so
        // phi_0 is flat, phi^+ peaks to sqrt(2) at x = 0, and phi^- tops out
        // at sqrt(2) cos(pi / 2p): the phase difference never reaches pi.
        const double defect = std::cos(std::numbers::pi / (2.0 * 3.0));
        CHECK(cf[0].sup_norms[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cf[1].sup_norms[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(cf[2].sup_norms[0] == doctest::Approx(std::sqrt(2.0) * defect).epsilon(1e-12));
        CHECK(cf[2].sup_norms[0] < std::sqrt(2.0) - 1e-3);
    }
}

TEST_CASE("ramified closed form, upper-triangular map") {
    const PrimeContext ctx = make_prime_context(kRamUt, 3);
    REQUIRE(ctx.upper_triangular);
    const HeckeGroup G = centralizer(kRamUt, ctx);
    const auto cf = ramified_closed_form(kRamUt, ctx);
    REQUIRE(cf.size() == 3);
    CHECK(gram_defect(collect_basis(cf)) < 1e-10);
    for (const auto& sp : cf) CHECK(eigen_deviation(G, sp.character, sp.basis[0]) < 1e-9);

    // M = I, so phi_0 is a point mass of sup sqrt(p): the short-vector
    // witness for the lower bound sqrt(p/2).
    CHECK(cf[0].sup_norms[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(cf[1].sup_norms[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(cf[2].sup_norms[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(cf[0].sup_norms[0] >= std::sqrt(3.0 / 2.0) - 1e-12);
}

TEST_CASE("split closed form, general conjugator") {
    const PrimeContext ctx = make_prime_context(kA, 7);
    const HeckeGroup G = centralizer(kA, ctx);
    const auto cf = split_closed_form(kA, ctx);
    REQUIRE(cf.size() == 6);

    std::int64_t total = 0;
    for (const auto& sp : cf) total += sp.dimension;
    CHECK(total == 7);
    CHECK(cf[3].dimension == 2);
    CHECK(gram_defect(collect_basis(cf)) < 1e-10);

    for (const auto& sp : cf) {
        for (const auto& b : sp.basis) CHECK(eigen_deviation(G, sp.character, b) < 1e-9);
        const EigenspaceResult es = eigenspace(G, sp.character);
        REQUIRE(es.dimension == sp.dimension);
        CHECK(subspace_distance(sp.basis, es.basis) < 1e-8);
    }

    // away from the triangular case every basis eigenfunction obeys the
    // Weil-bound ceiling 2/sqrt(1 - 1/p)
    for (const auto& sp : cf)
        for (const double s : sp.sup_norms) CHECK(s <= 2.0 / std::sqrt(1.0 - 1.0 / 7.0) + 1e-9);
}

TEST_CASE("split sup norms respect the Weil ceiling and can exceed two") {
    // sup phi_chi <= sqrt(p/(p-1)) * (2 sqrt p)/sqrt(p) = 2/sqrt(1 - 1/p).
    // The clean constant 2 is NOT an upper bound: p = 23 nearly saturates
    // the ceiling (2.0446 vs 2.0449) from p = 17 on.
    double max23 = 0.0;
    for (const std::int64_t p : {7, 17, 23, 31}) {
        const PrimeContext ctx = make_prime_context(kA, p);
        REQUIRE(ctx.kind == PrimeKind::Split);
        REQUIRE(!ctx.upper_triangular);
        const double ceiling = 2.0 / std::sqrt(1.0 - 1.0 / double(p));
        for (const auto& sp : split_closed_form(kA, ctx))
            for (const double s : sp.sup_norms) {
                CHECK(s <= ceiling + 1e-9);
                if (p == 23) max23 = std::max(max23, s);
            }
    }
    CHECK(max23 > 2.0);
}

TEST_CASE("split upper-triangular closed form and its extremal vector") {
    const PrimeContext ctx = make_prime_context(kSplitUt, 5);
    const SplitUtReport rep = split_ut_closed_form(kSplitUt, ctx);
    REQUIRE(rep.spaces.size() == 4);
    CHECK(rep.two_dim_char_index == 2);
    CHECK(rep.spaces[2].dimension == 2);

    // flat multiplicative states keep sup sqrt(p/(p-1)); the delta survives
    // as a point mass of sup sqrt(p)
    CHECK(rep.chi_sup == doctest::Approx(std::sqrt(5.0 / 4.0)).epsilon(1e-12));
    CHECK(rep.phi0_sup == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    // phi_chi0 and phi_0 have disjoint supports, so the sup over unit
    // vectors of the plane is attained at the point mass itself
    CHECK(rep.extremal_sup == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(rep.phi0_sup >= std::sqrt(5.0 / 2.0)); // the lower-bound witness

    const HeckeGroup G = centralizer(kSplitUt, ctx);
    for (const auto& sp : rep.spaces) {
        const EigenspaceResult es = eigenspace(G, sp.character);
        REQUIRE(es.dimension == sp.dimension);
        CHECK(subspace_distance(sp.basis, es.basis) < 1e-8);
        for (const auto& b : sp.basis) CHECK(eigen_deviation(G, sp.character, b) < 1e-9);
    }
}

TEST_CASE("closed forms reject the wrong classification") {
    CHECK_THROWS_AS(ramified_closed_form(kA, make_prime_context(kA, 7)), WrongPrimeType);
    CHECK_THROWS_AS(split_closed_form(kRamGen, make_prime_context(kRamGen, 3)), WrongPrimeType);
    CHECK_THROWS_AS(split_ut_closed_form(kA, make_prime_context(kA, 13)), WrongPrimeType);
    // split but not upper triangular
    CHECK_THROWS_AS(split_ut_closed_form(kA, make_prime_context(kA, 7)), WrongPrimeType);
}

TEST_CASE("subspace_distance separates distinct eigenspaces") {
    const PrimeContext ctx = make_prime_context(kRamGen, 3);
    const auto cf = ramified_closed_form(kRamGen, ctx);
    CHECK(subspace_distance(cf[0].basis, cf[0].basis) < 1e-12);
    CHECK(subspace_distance(cf[0].basis, cf[1].basis) == doctest::Approx(1.0).epsilon(1e-9));
}
