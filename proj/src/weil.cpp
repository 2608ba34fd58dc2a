#include "catmap/weil.hpp"

#include <cmath>

namespace catmap {

QuantumState make_zero_state(std::int64_t modulus) {
    return {modulus, std::vector<cplx>(static_cast<std::size_t>(modulus))};
}

QuantumState make_delta(const PrimeContext& ctx, std::int64_t i) {
    QuantumState f = make_zero_state(ctx.p);
    f[mod_norm(i, ctx.p)] = 1.0;
    return f;
}

cplx inner_product(const QuantumState& f, const QuantumState& g) {
    if (f.modulus != g.modulus)
        throw ContextMismatch("inner_product: states live on different moduli");
    cplx s{};
    for (std::size_t x = 0; x < f.v.size(); ++x) s += f.v[x] * std::conj(g.v[x]);
    return s / static_cast<double>(f.modulus);
}

double norm(const QuantumState& f) { return std::sqrt(std::abs(inner_product(f, f))); }

double sup_norm(const QuantumState& f) {
    double m = 0.0;
    for (const cplx& c : f.v) m = std::max(m, std::abs(c));
    return m;
}

QuantumState apply(const LinearOperator& op, const QuantumState& f) {
    if (op.modulus != f.modulus)
        throw ContextMismatch("apply: operator and state moduli differ");
    return {f.modulus, matvec(op.m, f.v)};
}

QuantumState apply_upper(std::int64_t b, const QuantumState& f, const PrimeContext& ctx) {
    if (f.modulus != ctx.p) throw ContextMismatch("apply_upper: state modulus != p");
    const std::int64_t p = ctx.p;
    QuantumState out = make_zero_state(p);
    const std::int64_t bb = mod_norm(b, p);
    for (std::int64_t x = 0; x < p; ++x)
        out[x] = unit_root(ctx.r * (bb * (x * x % p) % p) % p, p) * f[x];
    return out;
}

QuantumState apply_diag(std::int64_t t, const QuantumState& f, const PrimeContext& ctx) {
    if (f.modulus != ctx.p) throw ContextMismatch("apply_diag: state modulus != p");
    const std::int64_t p = ctx.p;
    const std::int64_t tt = mod_norm(t, p);
    if (tt == 0) throw SingularGenerator("apply_diag: t must be nonzero mod p");
    const double lam = legendre(tt, p);
    QuantumState out = make_zero_state(p);
    for (std::int64_t x = 0; x < p; ++x) out[x] = lam * f[tt * x % p];
    return out;
}

QuantumState apply_fourier(const QuantumState& f, const PrimeContext& ctx) {
    if (f.modulus != ctx.p) throw ContextMismatch("apply_fourier: state modulus != p");
    const std::int64_t p = ctx.p;
    const RootTable roots = make_root_table(p);
    const cplx scale = ctx.fourier_scalar / std::sqrt(static_cast<double>(p));
    const std::int64_t two_r = mod_norm(2 * ctx.r, p);
    QuantumState out = make_zero_state(p);
    for (std::int64_t x = 0; x < p; ++x) {
        cplx acc{};
        for (std::int64_t y = 0; y < p; ++y) acc += f[y] * roots[two_r * x % p * y % p];
        out[x] = scale * acc;
    }
    return out;
}

namespace {

struct Bruhat {
    bool has_w = false;
    std::int64_t b1 = 0, b2 = 0, t = 1; // M = n(b1) w n(b2) diag(t) or n(b2) diag(t)
};

Bruhat factor(const Sl2& M, std::int64_t p) {
    const std::int64_t det = mod_norm(M.a * M.d - M.b * M.c, p);
    if (det != 1) throw NotSpecialLinear("build_unitary: determinant is not 1 mod p");
    Bruhat f;
    if (M.c != 0) {
        const std::int64_t cinv = mod_inv(M.c, p);
        f.has_w = true;
        f.t = mod_norm(-M.c, p);
        f.b1 = mod_norm(M.a * cinv, p);
        f.b2 = mod_norm(M.c * M.d, p);
    } else {
        // [[t, b],[0, t^-1]] = [[1, b t],[0, 1]] [[t, 0],[0, t^-1]]
        f.t = M.a;
        f.b2 = mod_norm(M.b * M.a, p);
    }
    return f;
}

// Column i of U_p(M) through the generator sequence.  A delta stays a single
// spike until the Fourier step, so the column costs O(p).
void delta_column_bruhat(const Bruhat& f, std::int64_t i,
                         const PrimeContext& ctx, const RootTable& roots, cplx* col) {
    const std::int64_t p = ctx.p;
    const std::int64_t r = ctx.r;

    // diag(t): delta_i -> Lambda(t) delta_{i/t}
    const std::int64_t j0 = mod_inv(f.t, p) * i % p;
    cplx amp = static_cast<double>(legendre(f.t, p));

    if (!f.has_w) {
        amp *= roots[r * (f.b2 * (j0 * j0 % p) % p) % p];
        for (std::int64_t x = 0; x < p; ++x) col[x] = cplx{};
        col[j0] = amp;
        return;
    }

    // n(b2) multiplies the spike, w spreads it, n(b1) multiplies pointwise.
    amp *= roots[r * (f.b2 * (j0 * j0 % p) % p) % p];
    amp *= ctx.fourier_scalar / std::sqrt(static_cast<double>(p));
    const std::int64_t two_r = mod_norm(2 * r, p);
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t kw = two_r * x % p * j0 % p;
        const std::int64_t k1 = r * (f.b1 * (x * x % p) % p) % p;
        col[x] = amp * roots[kw] * roots[k1];
    }
}

} // namespace

LinearOperator build_unitary(const Sl2& Min, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const Sl2 M = sl2_reduce(Min.a, Min.b, Min.c, Min.d, p);
    const Bruhat f = factor(M, p);
    const RootTable roots = make_root_table(p);

    LinearOperator op{p, CMatrix(p)};
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < p; ++i) {
        std::vector<cplx> col(static_cast<std::size_t>(p));
        delta_column_bruhat(f, i, ctx, roots, col.data());
        for (std::int64_t x = 0; x < p; ++x) op.m.at(x, i) = col[static_cast<std::size_t>(x)];
    }
    return op;
}

LinearOperator build_unitary(const CatMap& M, const PrimeContext& ctx) {
    return build_unitary(sl2_reduce(M, ctx.p), ctx);
}

QuantumState delta_action(const Sl2& Min, std::int64_t i, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const Sl2 M = sl2_reduce(Min.a, Min.b, Min.c, Min.d, p);
    if (mod_norm(M.a * M.d - M.b * M.c, p) != 1)
        throw NotSpecialLinear("delta_action: determinant is not 1 mod p");
    if (M.c == 0)
        throw UpperTriangularMatrix("delta_action: closed form requires c != 0 mod p");

    i = mod_norm(i, p);
    const std::int64_t cinv = mod_inv(M.c, p);
    const cplx scalar = ctx.fourier_scalar / std::sqrt(static_cast<double>(p)) *
                        static_cast<double>(legendre(mod_norm(-M.c, p), p));
    const RootTable roots = make_root_table(p);
    const std::int64_t di2 = M.d * (i * i % p) % p;

    QuantumState out = make_zero_state(p);
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t q = mod_norm(M.a * (x * x % p) + di2 - 2 * x % p * i, p);
        out[x] = scalar * roots[ctx.r * (q * cinv % p) % p];
    }
    return out;
}

QuantumState apply_sl2(const Sl2& Min, const QuantumState& f, const PrimeContext& ctx) {
    if (f.modulus != ctx.p) throw ContextMismatch("apply_sl2: state modulus != p");
    const std::int64_t p = ctx.p;
    const Sl2 M = sl2_reduce(Min.a, Min.b, Min.c, Min.d, p);
    const Bruhat fac = factor(M, p);

    QuantumState g = apply_diag(fac.t, f, ctx);
    g = apply_upper(fac.b2, g, ctx);
    if (!fac.has_w) return g;
    g = apply_fourier(g, ctx);
    return apply_upper(fac.b1, g, ctx);
}

cplx trace_unitary(const Sl2& M, const PrimeContext& ctx) {
    return trace(build_unitary(M, ctx).m);
}

Sl2 random_sl2(Rng& rng, std::int64_t p) {
    // First row uniform among nonzero vectors; the fiber over it has size p.
    std::int64_t a, b;
    do { a = rng.residue(p); b = rng.residue(p); } while (a == 0 && b == 0);
    std::int64_t c, d;
    if (a != 0) {
        c = rng.residue(p);
        d = mod_norm((1 + b * c) % p * mod_inv(a, p), p);
    } else {
        c = mod_norm(-mod_inv(b, p), p);
        d = rng.residue(p);
    }
    return {a, b, c, d};
}

double check_multiplicativity(const PrimeContext& ctx, int trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const Sl2 m1 = random_sl2(rng, ctx.p);
        const Sl2 m2 = random_sl2(rng, ctx.p);
        const LinearOperator u1 = build_unitary(m1, ctx);
        const LinearOperator u2 = build_unitary(m2, ctx);
        const LinearOperator u12 = build_unitary(sl2_mul(m1, m2, ctx.p), ctx);
        worst = std::max(worst, max_abs_diff(u12.m, matmul(u1.m, u2.m)));
    }
    return worst;
}

} // namespace catmap
