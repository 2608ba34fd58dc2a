#include "catmap/exp_sums.hpp"

#include <algorithm>
#include <cmath>

namespace catmap {

ExpSumContext make_exp_sum_context(HeckeGroup G) {
    if (G.kind != PrimeKind::Inert)
        throw WrongPrimeType("exponential sums are defined for inert primes");
    const std::int64_t p = G.ctx.p;
    const std::int64_t D = G.D;
    ExpSumContext E;
    const std::int64_t X = G.M.a, Y = G.M.b, Z = G.M.c, W = G.M.d;
    const std::int64_t w2 = mod_norm(W * W - D * Z * Z, p);
    if (w2 == 0) throw Error("W^2 - D Z^2 vanished for a non-square D");
    E.F = mod_inv(w2, p);
    E.alpha_sign = legendre(w2, p);
    E.alpha_coeff = mod_mul(mod_norm(Y * W - D * X * Z, p), E.F, p);

    E.lambda_t.assign(static_cast<std::size_t>(p), 0.0);
    E.inv_t.assign(static_cast<std::size_t>(p), 0);
    for (std::int64_t t = 1; t < p; ++t) {
        const std::int64_t den = mod_norm(1 - D * t * t, p); // never 0: D non-square
        const std::int64_t b = mod_mul(2 * t, mod_inv(den, p), p);
        E.lambda_t[static_cast<std::size_t>(t)] =
            static_cast<double>(legendre(mod_norm(-b, p), p));
        E.inv_t[static_cast<std::size_t>(t)] = mod_inv(t, p);
    }
    const std::int64_t rf = mod_mul(G.ctx.r, E.F, p);
    E.psi_F.reserve(static_cast<std::size_t>(p));
    for (std::int64_t u = 0; u < p; ++u) E.psi_F.push_back(G.roots_p[mod_mul(rf, u, p)]);
    E.G = std::move(G);
    return E;
}

ExpSumContext make_exp_sum_context(const CatMap& A, const PrimeContext& ctx) {
    return make_exp_sum_context(centralizer(A, ctx));
}

PreparedCharacter prepare_character(const ExpSumContext& E, const HeckeCharacter& nu) {
    const std::int64_t p = E.G.ctx.p;
    if (static_cast<std::int64_t>(nu.values.size()) != p + 1)
        throw ContextMismatch("character table size differs from the group order");
    PreparedCharacter pc;
    pc.index = nu.index;
    pc.minus_one = std::conj(nu.values[1]); // elements are ordered t = 0, inf, 1..p-1
    pc.nu_bar.assign(static_cast<std::size_t>(p), cplx{});
    for (std::int64_t t = 1; t < p; ++t)
        pc.nu_bar[static_cast<std::size_t>(t)] = std::conj(nu.values[static_cast<std::size_t>(t + 1)]);
    return pc;
}

cplx alpha(std::int64_t i, std::int64_t x, const ExpSumContext& E) {
    const std::int64_t p = E.G.ctx.p;
    const std::int64_t k =
        mod_mul(E.G.ctx.r, mod_mul(E.alpha_coeff, mod_norm(x * x - i * i, p), p), p);
    return static_cast<double>(E.alpha_sign) * E.G.roots_p[k];
}

cplx exp_sum(const PreparedCharacter& nu, std::int64_t i, std::int64_t x,
             const ExpSumContext& E) {
    const std::int64_t p = E.G.ctx.p;
    const std::int64_t r = E.G.ctx.r;
    // (x-i)^2/(2t) + D t (x+i)^2/2 with 1/2 = r
    const std::int64_t a1 = mod_mul(mod_norm((x - i) * (x - i), p), r, p);
    const std::int64_t a2 = mod_mul(mod_mul(E.G.D, mod_norm((x + i) * (x + i), p), p), r, p);
    cplx acc = 0.0;
    for (std::int64_t t = 1; t < p; ++t) {
        const std::int64_t u = mod_norm(a1 * E.inv_t[static_cast<std::size_t>(t)] + a2 * t, p);
        acc += nu.nu_bar[static_cast<std::size_t>(t)] *
               E.lambda_t[static_cast<std::size_t>(t)] * E.psi_F[static_cast<std::size_t>(u)];
    }
    return acc;
}

cplx exp_sum_naive(const HeckeCharacter& nu, std::int64_t i, std::int64_t x,
                   const ExpSumContext& E) {
    const std::int64_t p = E.G.ctx.p;
    const std::int64_t r = E.G.ctx.r;
    const std::int64_t D = E.G.D;
    cplx acc = 0.0;
    for (std::int64_t t = 1; t < p; ++t) {
        const std::int64_t den = mod_norm(1 - D * t * t, p);
        const std::int64_t b = mod_mul(2 * t, mod_inv(den, p), p);
        const std::int64_t u = mod_norm(
            mod_mul(mod_mul(mod_norm((x - i) * (x - i), p), r, p), mod_inv(t, p), p) +
                mod_mul(mod_mul(mod_mul(D, t, p), mod_norm((x + i) * (x + i), p), p), r, p),
            p);
        acc += std::conj(nu.values[static_cast<std::size_t>(t + 1)]) *
               static_cast<double>(legendre(mod_norm(-b, p), p)) *
               unit_root(mod_mul(mod_mul(r, E.F, p), u, p), p);
    }
    return acc;
}

QuantumState projection_via_exp_sum(const HeckeCharacter& nu, std::int64_t i,
                                    const ExpSumContext& E) {
    const std::int64_t p = E.G.ctx.p;
    const PreparedCharacter pc = prepare_character(E, nu);
    const double lm1 = static_cast<double>(legendre(p - 1, p));
    const double inv_sqrt_p = 1.0 / std::sqrt(static_cast<double>(p));
    QuantumState out = make_zero_state(p);
    for (std::int64_t x = 0; x < p; ++x) {
        cplx v = alpha(i, x, E) * E.G.ctx.fourier_scalar * exp_sum(pc, i, x, E) * inv_sqrt_p;
        if (x == i) v += 1.0;
        if (mod_norm(-x, p) == i) v += pc.minus_one * lm1;
        out[x] = v / static_cast<double>(p + 1);
    }
    return out;
}

Regime classify_regime(std::int64_t i, std::int64_t x, std::int64_t p) {
    i = mod_norm(i, p);
    x = mod_norm(x, p);
    if (i == 0 && x == 0) return Regime::ZeroZero;
    if (x == i || x == mod_norm(-i, p)) return Regime::Diagonal;
    return Regime::Generic;
}

namespace {

struct RegimeMax {
    double generic = 0.0, diagonal = 0.0, zero = 0.0;
};

void finish_report(BoundReport& rep, std::int64_t p) {
    const double tol = 1e-8;
    rep.pass = rep.max_generic <= 4.0 + tol && rep.max_diagonal <= 3.0 + tol &&
               rep.max_zero <= 2.0 + tol;
    rep.p = p;
}

} // namespace

BoundReport verify_bounds_exhaustive(const ExpSumContext& E) {
    const std::int64_t p = E.G.ctx.p;
    const double inv_sqrt_p = 1.0 / std::sqrt(static_cast<double>(p));
    const std::vector<HeckeCharacter> chars = characters(E.G);
    const std::int64_t nc = static_cast<std::int64_t>(chars.size());

    std::vector<RegimeMax> slot(static_cast<std::size_t>(nc));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nc; ++c) {
        const PreparedCharacter pc = prepare_character(E, chars[static_cast<std::size_t>(c)]);
        RegimeMax& m = slot[static_cast<std::size_t>(c)];
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t x = 0; x < p; ++x) {
                const double v = std::abs(exp_sum(pc, i, x, E)) * inv_sqrt_p;
                switch (classify_regime(i, x, p)) {
                    case Regime::Generic: m.generic = std::max(m.generic, v); break;
                    case Regime::Diagonal: m.diagonal = std::max(m.diagonal, v); break;
                    case Regime::ZeroZero: m.zero = std::max(m.zero, v); break;
                }
            }
    }

    BoundReport rep;
    rep.exhaustive = true;
    rep.triples = nc * p * p;
    for (const RegimeMax& m : slot) {
        rep.max_generic = std::max(rep.max_generic, m.generic);
        rep.max_diagonal = std::max(rep.max_diagonal, m.diagonal);
        rep.max_zero = std::max(rep.max_zero, m.zero);
    }
    rep.n_zero = nc;
    rep.n_diagonal = nc * 2 * (p - 1); // x = +-i with i != 0
    rep.n_generic = rep.triples - rep.n_diagonal - rep.n_zero;
    finish_report(rep, p);
    return rep;
}

BoundReport verify_bounds_sampled(const ExpSumContext& E, std::int64_t k, std::uint64_t seed) {
    const std::int64_t p = E.G.ctx.p;
    const double inv_sqrt_p = 1.0 / std::sqrt(static_cast<double>(p));
    const std::vector<HeckeCharacter> chars = characters(E.G);
    std::vector<PreparedCharacter> prepared;
    prepared.reserve(chars.size());
    for (const auto& nu : chars) prepared.push_back(prepare_character(E, nu));

    BoundReport rep;
    rep.exhaustive = false;
    rep.triples = k;
    rep.seed = seed;
    Rng rng(seed);
    for (std::int64_t s = 0; s < k; ++s) {
        const std::size_t c = static_cast<std::size_t>(rng.below(prepared.size()));
        const std::int64_t i = rng.residue(p);
        const std::int64_t x = rng.residue(p);
        const double v = std::abs(exp_sum(prepared[c], i, x, E)) * inv_sqrt_p;
        switch (classify_regime(i, x, p)) {
            case Regime::Generic:
                rep.max_generic = std::max(rep.max_generic, v);
                ++rep.n_generic;
                break;
            case Regime::Diagonal:
                rep.max_diagonal = std::max(rep.max_diagonal, v);
                ++rep.n_diagonal;
                break;
            case Regime::ZeroZero:
                rep.max_zero = std::max(rep.max_zero, v);
                ++rep.n_zero;
                break;
        }
    }
    finish_report(rep, p);
    return rep;
}

} // namespace catmap
