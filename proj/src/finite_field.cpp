#include "catmap/finite_field.hpp"

#include <cmath>

namespace catmap {

void validate_cat_map(const CatMap& A) {
    if (A.det() != 1)
        throw InvalidCatMap("cat map must have determinant 1");
    if (std::abs(A.trace()) <= 2)
        throw InvalidCatMap("cat map must be hyperbolic (|trace| > 2)");
    if (mod_norm(A.a, 2) != 1 || mod_norm(A.d, 2) != 1 ||
        mod_norm(A.b, 2) != 0 || mod_norm(A.c, 2) != 0)
        throw InvalidCatMap("cat map must be congruent to the identity mod 2");
}

const char* to_string(PrimeKind k) {
    switch (k) {
        case PrimeKind::Inert: return "inert";
        case PrimeKind::Split: return "split";
        case PrimeKind::Ramified: return "ramified";
    }
    return "?";
}

Sl2 sl2_reduce(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p) {
    return {mod_norm(a, p), mod_norm(b, p), mod_norm(c, p), mod_norm(d, p)};
}

Sl2 sl2_reduce(const CatMap& A, std::int64_t p) { return sl2_reduce(A.a, A.b, A.c, A.d, p); }

Sl2 sl2_mul(const Sl2& x, const Sl2& y, std::int64_t p) {
    return sl2_reduce(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                      x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, p);
}

Sl2 sl2_inv(const Sl2& x, std::int64_t p) {
    const std::int64_t det = mod_norm(x.a * x.d - x.b * x.c, p);
    if (det != 1) throw NotSpecialLinear("sl2_inv: determinant is not 1 mod p");
    return sl2_reduce(x.d, -x.b, -x.c, x.a, p);
}

int legendre(std::int64_t a, std::int64_t p) {
    if (!is_odd_prime(p)) throw InvalidPrime("legendre: modulus must be an odd prime");
    a = mod_norm(a, p);
    if (a == 0) return 0;
    const std::int64_t e = mod_pow(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

cplx additive_char(std::int64_t x, const PrimeContext& ctx) {
    return unit_root(mod_norm(ctx.r * mod_norm(x, ctx.p), ctx.p), ctx.p);
}

cplx gauss_sum(std::int64_t a, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    cplx s{};
    for (std::int64_t x = 0; x < p; ++x)
        s += unit_root(mod_norm(-ctx.r * mod_norm(a * x % p * x, p), p), p);
    return s / std::sqrt(static_cast<double>(p));
}

PrimeKind classify_prime(const CatMap& A, std::int64_t p) {
    validate_cat_map(A);
    if (!is_odd_prime(p)) throw InvalidPrime("classify_prime: p must be an odd prime");
    const std::int64_t disc = mod_norm(A.trace() * A.trace() - 4, p);
    switch (legendre(disc, p)) {
        case 1: return PrimeKind::Split;
        case -1: return PrimeKind::Inert;
        default: return PrimeKind::Ramified;
    }
}

PrimeContext make_prime_context(const CatMap& A, std::int64_t p) {
    PrimeContext ctx;
    ctx.kind = classify_prime(A, p); // validates A and p
    ctx.p = p;
    ctx.r = (p + 1) / 2;
    ctx.upper_triangular = mod_norm(A.c, p) == 0;
    ctx.fourier_scalar = gauss_sum(-1, ctx);
    return ctx;
}

std::int64_t find_nonsquare(std::int64_t p) {
    if (!is_odd_prime(p)) throw InvalidPrime("find_nonsquare: p must be an odd prime");
    for (std::int64_t d = 2; d < p; ++d)
        if (legendre(d, p) == -1) return d;
    throw Error("find_nonsquare: unreachable for odd prime p");
}

Fp2 fp2_mul(const Fp2& x, const Fp2& y, std::int64_t D, std::int64_t p) {
    return {mod_norm(x.a * y.a + mod_norm(D * x.b % p * y.b, p), p),
            mod_norm(x.a * y.b + x.b * y.a, p)};
}

std::int64_t fp2_norm(const Fp2& x, std::int64_t D, std::int64_t p) {
    return mod_norm(x.a * x.a - mod_norm(D * x.b % p * x.b, p), p);
}

Fp2 hilbert90(P1 t, std::int64_t D, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    if (legendre(D, p) != -1) throw Error("hilbert90: D must be a non-square");
    if (t.infinite) return {p - 1, 0};
    const std::int64_t tt = mod_norm(t.t, p);
    const std::int64_t dt2 = mod_norm(D * tt % p * tt, p);
    // 1 - D t^2 never vanishes: D is not a square.
    const std::int64_t den = mod_inv(mod_norm(1 - dt2, p), p);
    return {mod_norm((1 + dt2) * den, p), mod_norm(2 * tt % p * den, p)};
}

std::int64_t TorusDlog::dlog(const Fp2& x) const {
    const auto it = table.find(mod_norm(x.a, p) * p + mod_norm(x.b, p));
    if (it == table.end())
        throw NotInGroup("dlog: element is not in the norm-one subgroup");
    return it->second;
}

TorusDlog torus_generator_and_dlog(std::int64_t D, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const std::int64_t n = p + 1;

    // All norm-one elements, via the parametrization.
    std::vector<Fp2> elems;
    elems.push_back(hilbert90({0, false}, D, ctx));
    elems.push_back(hilbert90(P1::inf(), D, ctx));
    for (std::int64_t t = 1; t < p; ++t) elems.push_back(hilbert90({t, false}, D, ctx));

    const Fp2 one{1, 0};
    for (const Fp2& cand : elems) {
        // Multiplicative order of cand; the subgroup is cyclic of order p + 1.
        std::int64_t ord = 1;
        Fp2 acc = cand;
        while (!(acc == one)) { acc = fp2_mul(acc, cand, D, p); ++ord; }
        if (ord != n) continue;

        TorusDlog out;
        out.p = p;
        out.D = D;
        out.order = n;
        out.generator = cand;
        Fp2 pw = one;
        for (std::int64_t k = 0; k < n; ++k) {
            out.table.emplace(pw.a * p + pw.b, k);
            pw = fp2_mul(pw, cand, D, p);
        }
        return out;
    }
    throw Error("torus_generator_and_dlog: no generator found (non-cyclic?)");
}

} // namespace catmap
