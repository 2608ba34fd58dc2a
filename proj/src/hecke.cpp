#include "catmap/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace catmap {

namespace {

Sl2 torus_matrix(const Fp2& h, std::int64_t D, std::int64_t p) {
    return sl2_reduce(h.a, mod_mul(h.b, D, p), h.b, h.a, p);
}

bool commutes(const Sl2& x, const Sl2& y, std::int64_t p) {
    return sl2_mul(x, y, p) == sl2_mul(y, x, p);
}

void require_conjugation(const Sl2& A, const Sl2& M, const Sl2& normal, std::int64_t p) {
    const std::int64_t det = mod_norm(M.a * M.d - M.b * M.c, p);
    if (det != 1 || !(sl2_mul(A, M, p) == sl2_mul(M, normal, p)))
        throw ConjugatorNotFound("conjugator verification failed");
}

Sl2 conjugator_inert(const Sl2& a, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const std::int64_t tr = mod_norm(a.a + a.d, p);
    const std::int64_t D = find_nonsquare(p);
    const std::int64_t s = mod_mul(tr, ctx.r, p);
    // disc/4 and D are both non-squares, so their ratio has a root u with
    // (A - s I)/u squaring to D I.
    const std::int64_t quarter = mod_mul(mod_norm(tr * tr - 4, p), mod_mul(ctx.r, ctx.r, p), p);
    const std::int64_t u = sqrt_mod(mod_mul(quarter, mod_inv(D, p), p), p);
    if (u <= 0) throw ConjugatorNotFound("inert discriminant has no usable square root");
    const std::int64_t ui = mod_inv(u, p);
    const std::int64_t j11 = mod_mul(ui, mod_norm(a.a - s, p), p);
    const std::int64_t j12 = mod_mul(ui, a.b, p);
    const std::int64_t j21 = mod_mul(ui, a.c, p);
    const std::int64_t j22 = mod_mul(ui, mod_norm(a.d - s, p), p);
    // M0 solves M0 [[0,D],[1,0]] = J~ M0; one of the two column choices is
    // always invertible because J~ has no eigenvector over F_p.
    const Sl2 m0 = (j21 != 0) ? Sl2{1, j11, 0, j21} : Sl2{0, j12, 1, j22};
    const std::int64_t det0 = mod_norm(m0.a * m0.d - m0.b * m0.c, p);
    // Fix the determinant with a torus factor: the norm form x^2 - D y^2 is
    // onto F_p^x, so some g = x I + y K has norm det0^{-1}.
    const std::int64_t target = mod_inv(det0, p);
    Sl2 g;
    bool found = false;
    for (std::int64_t y = 0; y < p && !found; ++y) {
        const std::int64_t x = sqrt_mod(mod_norm(target + D * y * y, p), p);
        if (x >= 0) {
            g = sl2_reduce(x, mod_mul(y, D, p), y, x, p);
            found = true;
        }
    }
    if (!found) throw ConjugatorNotFound("norm form missed the required value");
    const Sl2 M = sl2_mul(m0, g, p);
    require_conjugation(a, M, torus_matrix(Fp2{s, u}, D, p), p);
    return M;
}

Sl2 conjugator_split(const Sl2& a, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const std::int64_t tr = mod_norm(a.a + a.d, p);
    if (a.c == 0) {
        // A is already triangular; keep M upper triangular as well.
        const std::int64_t den = mod_norm(a.d - a.a, p);
        const Sl2 M = sl2_reduce(mod_inv(den, p), a.b, 0, den, p);
        require_conjugation(a, M, Sl2{a.a, 0, 0, a.d}, p);
        return M;
    }
    const std::int64_t sq = sqrt_mod(mod_norm(tr * tr - 4, p), p);
    if (sq <= 0) throw ConjugatorNotFound("split discriminant has no square root");
    const std::int64_t lam = mod_mul(ctx.r, tr + sq, p);
    const std::int64_t lam2 = mod_norm(tr - lam, p);
    // Columns are the eigenvectors (lam - d, c), (lam2 - d, c); their
    // determinant is c (lam - lam2) = c sq.
    const std::int64_t di = mod_inv(mod_mul(a.c, sq, p), p);
    const Sl2 M = sl2_reduce(mod_mul(mod_norm(lam - a.d, p), di, p), mod_norm(lam2 - a.d, p),
                             mod_mul(a.c, di, p), a.c, p);
    require_conjugation(a, M, Sl2{lam, 0, 0, lam2}, p);
    return M;
}

Sl2 conjugator_ramified(const Sl2& a, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p;
    const std::int64_t lam = mod_mul(mod_norm(a.a + a.d, p), ctx.r, p); // 1 or p-1
    const std::int64_t j11 = mod_norm(a.a - lam, p);
    const std::int64_t j12 = a.b;
    const std::int64_t j21 = a.c;
    const std::int64_t j22 = mod_norm(a.d - lam, p);
    if (j11 == 0 && j12 == 0 && j21 == 0 && j22 == 0)
        throw ConjugatorNotFound(
            "A = +-I mod p: the centralizer is all of SL2(F_p), not a 2p-element group");
    // J = A - lam I is nonzero nilpotent.  Put v1 = J e, v2 = e for a basis
    // vector e with J e != 0; J traceless nilpotent forces det(v1, v2) != 0.
    std::int64_t v1x, v1y, v2x, v2y;
    if (j11 != 0 || j21 != 0) {
        v1x = j11; v1y = j21; v2x = 1; v2y = 0;
    } else {
        v1x = j12; v1y = j22; v2x = 0; v2y = 1;
    }
    const std::int64_t det0 = mod_norm(v1x * v2y - v1y * v2x, p);
    if (det0 == 0) throw ConjugatorNotFound("degenerate Jordan frame");
    const std::int64_t di = mod_inv(det0, p);
    const Sl2 M = sl2_reduce(mod_mul(v1x, di, p), v2x, mod_mul(v1y, di, p), v2y, p);
    require_conjugation(a, M, Sl2{lam, det0, 0, lam}, p);
    return M;
}

} // namespace

Sl2 find_conjugator(const CatMap& A, const PrimeContext& ctx) {
    if (classify_prime(A, ctx.p) != ctx.kind)
        throw ContextMismatch("prime context was built for a different matrix");
    const Sl2 a = sl2_reduce(A, ctx.p);
    switch (ctx.kind) {
        case PrimeKind::Inert: return conjugator_inert(a, ctx);
        case PrimeKind::Split: return conjugator_split(a, ctx);
        case PrimeKind::Ramified: return conjugator_ramified(a, ctx);
    }
    throw Error("unreachable");
}

std::int64_t HeckeGroup::index_of(const Sl2& B) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].mat == B) return static_cast<std::int64_t>(i);
    throw NotInGroup("matrix is not in the centralizer");
}

HeckeGroup centralizer(const CatMap& A, const PrimeContext& ctx) {
    HeckeGroup G;
    G.ctx = ctx;
    const std::int64_t p = ctx.p;
    G.A = sl2_reduce(A, p);
    G.kind = ctx.kind;
    G.M = find_conjugator(A, ctx);
    G.roots_p = make_root_table(p);
    const Sl2 Minv = sl2_inv(G.M, p);
    const auto conj = [&](const Sl2& t) { return sl2_mul(sl2_mul(G.M, t, p), Minv, p); };

    switch (G.kind) {
        case PrimeKind::Inert: {
            G.D = find_nonsquare(p);
            G.torus = torus_generator_and_dlog(G.D, ctx);
            const auto push = [&](P1 t, std::int64_t param) {
                const Fp2 h = hilbert90(t, G.D, ctx);
                G.elements.push_back({conj(torus_matrix(h, G.D, p)), param, 0});
                G.dlog.push_back(G.torus.dlog(h));
            };
            push(P1{0, false}, 0);
            push(P1::inf(), -1);
            for (std::int64_t t = 1; t < p; ++t) push(P1{t, false}, t);
            break;
        }
        case PrimeKind::Split: {
            for (std::int64_t g = 2; g < p; ++g) {
                std::int64_t ord = 1, pow = g;
                while (pow != 1) { pow = mod_mul(pow, g, p); ++ord; }
                if (ord == p - 1) { G.prim_root = g; break; }
            }
            std::vector<std::int64_t> ind(static_cast<std::size_t>(p), 0);
            std::int64_t pow = 1;
            for (std::int64_t e = 0; e < p - 1; ++e) {
                ind[static_cast<std::size_t>(pow)] = e;
                pow = mod_mul(pow, G.prim_root, p);
            }
            for (std::int64_t s = 1; s < p; ++s) {
                G.elements.push_back({conj(Sl2{s, 0, 0, mod_inv(s, p)}), s, 0});
                G.dlog.push_back(ind[static_cast<std::size_t>(s)]);
            }
            break;
        }
        case PrimeKind::Ramified: {
            for (const std::int64_t sigma : {std::int64_t{1}, std::int64_t{-1}})
                for (std::int64_t u = 0; u < p; ++u)
                    G.elements.push_back({conj(sl2_reduce(sigma, u, 0, sigma, p)), sigma, u});
            break;
        }
    }

    // Construction invariants: pairwise distinct, identity first, all
    // commuting with A.
    std::set<std::int64_t> seen;
    for (const auto& e : G.elements) {
        seen.insert(((e.mat.a * p + e.mat.b) * p + e.mat.c) * p + e.mat.d);
        if (!commutes(e.mat, G.A, p)) throw Error("centralizer element does not commute");
    }
    if (static_cast<std::int64_t>(seen.size()) != G.order() || !(G.elements[0].mat == Sl2{}))
        throw Error("centralizer construction produced a defective group");

    G.actions.reserve(G.elements.size());
    for (const auto& e : G.elements) {
        const Sl2& B = e.mat;
        ElementAction act;
        if (B.c != 0) {
            act.fourier_path = true;
            act.a = B.a;
            act.d = B.d;
            act.cinv = mod_inv(B.c, p);
            act.scalar = ctx.fourier_scalar / std::sqrt(static_cast<double>(p)) *
                         static_cast<double>(legendre(mod_norm(-B.c, p), p));
        } else {
            act.inv_t = mod_inv(B.a, p);
            act.b_invt = mod_mul(B.b, act.inv_t, p);
            act.sign = static_cast<double>(legendre(B.a, p));
        }
        G.actions.push_back(act);
    }
    return G;
}

std::vector<HeckeCharacter> characters(const HeckeGroup& G) {
    const std::int64_t p = G.ctx.p;
    const std::int64_t n = G.order();
    std::vector<HeckeCharacter> out;
    out.reserve(static_cast<std::size_t>(n));
    if (G.kind == PrimeKind::Ramified) {
        for (int sign_bit = 0; sign_bit < 2; ++sign_bit)
            for (std::int64_t k = 0; k < p; ++k) {
                HeckeCharacter nu;
                nu.index = sign_bit * p + k;
                nu.k = k;
                nu.sign = sign_bit ? -1 : 1;
                nu.values.reserve(static_cast<std::size_t>(n));
                for (const auto& e : G.elements) {
                    cplx v = G.roots_p[mod_mul(k, e.p1 * e.p2, p)];
                    if (e.p1 == -1) v *= static_cast<double>(nu.sign);
                    nu.values.push_back(v);
                }
                out.push_back(std::move(nu));
            }
        return out;
    }
    const std::int64_t m = (G.kind == PrimeKind::Inert) ? p + 1 : p - 1;
    const RootTable roots = make_root_table(m);
    for (std::int64_t k = 0; k < m; ++k) {
        HeckeCharacter nu;
        nu.index = k;
        nu.k = k;
        nu.values.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            nu.values.push_back(roots[mod_mul(k, G.dlog[static_cast<std::size_t>(i)], m)]);
        out.push_back(std::move(nu));
    }
    return out;
}

LinearOperator hecke_operator(const HeckeGroup& G, const Sl2& B) {
    const Sl2 rb = sl2_reduce(B.a, B.b, B.c, B.d, G.ctx.p);
    (void)G.index_of(rb);
    return build_unitary(rb, G.ctx);
}

QuantumState project(const HeckeGroup& G, const HeckeCharacter& nu, const QuantumState& f) {
    if (f.modulus != G.ctx.p) throw ContextMismatch("state modulus differs from the group prime");
    if (static_cast<std::int64_t>(nu.values.size()) != G.order())
        throw ContextMismatch("character table size differs from the group order");
    QuantumState acc = make_zero_state(G.ctx.p);
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        const QuantumState g = apply_sl2(G.elements[i].mat, f, G.ctx);
        const cplx w = std::conj(nu.values[i]);
        for (std::size_t x = 0; x < acc.v.size(); ++x) acc.v[x] += w * g.v[x];
    }
    const double inv_n = 1.0 / static_cast<double>(G.order());
    for (auto& z : acc.v) z *= inv_n;
    return acc;
}

LinearOperator projector_matrix(const HeckeGroup& G, const HeckeCharacter& nu) {
    const std::int64_t p = G.ctx.p;
    const std::int64_t r = G.ctx.r;
    if (static_cast<std::int64_t>(nu.values.size()) != G.order())
        throw ContextMismatch("character table size differs from the group order");
    LinearOperator P{p, CMatrix(p)};
    const double inv_n = 1.0 / static_cast<double>(G.order());
    for (std::size_t ei = 0; ei < G.elements.size(); ++ei) {
        const ElementAction& act = G.actions[ei];
        const cplx w = std::conj(nu.values[ei]) * inv_n;
        if (act.fourier_path) {
            const cplx ws = w * act.scalar;
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < p; ++i) {
                const std::int64_t di2 = mod_mul(act.d, i * i, p);
                for (std::int64_t x = 0; x < p; ++x) {
                    const std::int64_t q = mod_norm(act.a * x * x + di2 - 2 * x * i, p);
                    P.m.at(x, i) += ws * G.roots_p[mod_mul(r, mod_mul(q, act.cinv, p), p)];
                }
            }
        } else {
            for (std::int64_t i = 0; i < p; ++i) {
                const std::int64_t row = mod_mul(act.inv_t, i, p);
                const std::int64_t k = mod_mul(r, mod_mul(act.b_invt, i * i, p), p);
                P.m.at(row, i) += w * act.sign * G.roots_p[k];
            }
        }
    }
    return P;
}

namespace {

double norm_sq(const QuantumState& f) {
    double s = 0.0;
    for (const cplx& z : f.v) s += std::norm(z);
    return s / static_cast<double>(f.modulus);
}

void fix_phase(QuantumState& q) {
    for (const cplx& z : q.v)
        if (std::abs(z) > 1e-8) {
            const cplx rot = std::conj(z) / std::abs(z);
            for (cplx& w : q.v) w *= rot;
            return;
        }
}

} // namespace

EigenspaceResult eigenspace(const HeckeGroup& G, const HeckeCharacter& nu) {
    const std::int64_t p = G.ctx.p;
    const LinearOperator P = projector_matrix(G, nu);

    std::vector<QuantumState> res(static_cast<std::size_t>(p));
    std::vector<double> n2(static_cast<std::size_t>(p));
    for (std::int64_t i = 0; i < p; ++i) {
        auto& f = res[static_cast<std::size_t>(i)];
        f.modulus = p;
        f.v.resize(static_cast<std::size_t>(p));
        for (std::int64_t x = 0; x < p; ++x) f.v[static_cast<std::size_t>(x)] = P.m.at(x, i);
        n2[static_cast<std::size_t>(i)] = norm_sq(f);
    }

    EigenspaceResult out;
    out.character = nu;
    const double max_norm = std::sqrt(*std::max_element(n2.begin(), n2.end()));
    if (max_norm * max_norm < 1e-12) return out; // projector vanishes: dimension 0

    while (static_cast<std::int64_t>(out.basis.size()) < p) {
        std::size_t pivot = 0;
        for (std::size_t i = 1; i < n2.size(); ++i)
            if (n2[i] > n2[pivot]) pivot = i;
        const double pn = std::sqrt(n2[pivot]);
        if (pn <= 1e-6 * max_norm) break;

        QuantumState q = res[pivot];
        const double inv = 1.0 / pn;
        for (cplx& z : q.v) z *= inv;
        fix_phase(q);
        for (std::size_t i = 0; i < res.size(); ++i) {
            if (n2[i] == 0.0) continue;
            const cplx c = inner_product(res[i], q);
            for (std::size_t x = 0; x < q.v.size(); ++x) res[i].v[x] -= c * q.v[x];
            n2[i] = norm_sq(res[i]);
        }
        out.sup_norms.push_back(sup_norm(q));
        out.basis.push_back(std::move(q));
    }
    out.dimension = static_cast<std::int64_t>(out.basis.size());
    return out;
}

std::vector<EigenspaceResult> eigenbasis(const CatMap& A, const PrimeContext& ctx) {
    const HeckeGroup G = centralizer(A, ctx);
    const std::vector<HeckeCharacter> chars = characters(G);
    std::vector<EigenspaceResult> out;
    out.reserve(chars.size());
    for (const auto& nu : chars) out.push_back(eigenspace(G, nu));
    return out;
}

namespace {

QuantumState operator_column(const LinearOperator& U, std::int64_t i, double scale) {
    QuantumState s = make_zero_state(U.modulus);
    for (std::int64_t x = 0; x < U.modulus; ++x) s[x] = scale * U.m.at(x, i);
    return s;
}

EigenspaceResult one_dim(QuantumState phi, HeckeCharacter nu) {
    EigenspaceResult r;
    r.character = std::move(nu);
    r.dimension = 1;
    r.sup_norms = {sup_norm(phi)};
    r.basis.push_back(std::move(phi));
    return r;
}

} // namespace

std::vector<EigenspaceResult> ramified_closed_form(const CatMap& A, const PrimeContext& ctx) {
    if (ctx.kind != PrimeKind::Ramified)
        throw WrongPrimeType("ramified closed form requires a ramified prime");
    const std::int64_t p = ctx.p;
    const HeckeGroup G = centralizer(A, ctx);
    const std::vector<HeckeCharacter> chars = characters(G);
    const LinearOperator UM = build_unitary(G.M, ctx);
    const int eps_plus = legendre(p - 1, p); // sign of the -I action on delta_0

    const auto char_at = [&](std::int64_t k, int sign) {
        return chars[static_cast<std::size_t>((sign < 0 ? p : 0) + k)];
    };

    std::vector<EigenspaceResult> out;
    out.reserve(static_cast<std::size_t>(p));
    out.push_back(one_dim(operator_column(UM, 0, std::sqrt(static_cast<double>(p))),
                          char_at(0, eps_plus)));
    const double amp = std::sqrt(static_cast<double>(p) / 2.0);
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i) {
        const std::int64_t k = mod_mul(ctx.r, i * i, p);
        QuantumState plus = make_zero_state(p);
        QuantumState minus = make_zero_state(p);
        for (std::int64_t x = 0; x < p; ++x) {
            plus[x] = amp * (UM.m.at(x, i) + UM.m.at(x, p - i));
            minus[x] = amp * (UM.m.at(x, i) - UM.m.at(x, p - i));
        }
        out.push_back(one_dim(std::move(plus), char_at(k, eps_plus)));
        out.push_back(one_dim(std::move(minus), char_at(k, -eps_plus)));
    }
    return out;
}

std::vector<EigenspaceResult> split_closed_form(const CatMap& A, const PrimeContext& ctx) {
    if (ctx.kind != PrimeKind::Split)
        throw WrongPrimeType("split closed form requires a split prime");
    const std::int64_t p = ctx.p;
    const std::int64_t m = p - 1;
    const std::int64_t k0 = m / 2; // Legendre character index
    const HeckeGroup G = centralizer(A, ctx);
    const std::vector<HeckeCharacter> chars = characters(G);
    const LinearOperator UM = build_unitary(G.M, ctx);
    const RootTable roots = make_root_table(m);
    // Elements are ordered s = 1..p-1, so dlog doubles as the index table.
    const auto ind = [&](std::int64_t x) { return G.dlog[static_cast<std::size_t>(x - 1)]; };

    const double amp = std::sqrt(static_cast<double>(p) / static_cast<double>(m));
    std::vector<QuantumState> phis(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        QuantumState chi = make_zero_state(p);
        for (std::int64_t x = 1; x < p; ++x) chi[x] = roots[mod_mul(j, ind(x), m)];
        QuantumState phi{p, matvec(UM.m, chi.v)};
        for (cplx& z : phi.v) z *= amp;
        phis[static_cast<std::size_t>(j)] = std::move(phi);
    }
    QuantumState phi0 = operator_column(UM, 0, std::sqrt(static_cast<double>(p)));

    std::vector<EigenspaceResult> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t j = (k + k0) % m;
        if (k == k0) {
            EigenspaceResult two;
            two.character = chars[static_cast<std::size_t>(k)];
            two.dimension = 2;
            two.sup_norms = {sup_norm(phis[static_cast<std::size_t>(j)]), sup_norm(phi0)};
            two.basis = {phis[static_cast<std::size_t>(j)], phi0};
            out.push_back(std::move(two));
        } else {
            out.push_back(one_dim(phis[static_cast<std::size_t>(j)],
                                  chars[static_cast<std::size_t>(k)]));
        }
    }
    return out;
}

SplitUtReport split_ut_closed_form(const CatMap& A, const PrimeContext& ctx) {
    if (ctx.kind != PrimeKind::Split || !ctx.upper_triangular)
        throw WrongPrimeType("requires a split prime at which A is upper triangular");
    SplitUtReport rep;
    rep.spaces = split_closed_form(A, ctx);
    rep.two_dim_char_index = (ctx.p - 1) / 2;
    const EigenspaceResult& two = rep.spaces[static_cast<std::size_t>(rep.two_dim_char_index)];
    rep.phi0_sup = two.sup_norms[1];
    for (const auto& sp : rep.spaces)
        if (sp.dimension == 1) rep.chi_sup = std::max(rep.chi_sup, sp.sup_norms[0]);
    // The basis {phi_chi0, phi_0} is orthonormal, so the sup norm over unit
    // vectors of the plane is max_x sqrt(|u(x)|^2 + |v(x)|^2).
    for (std::int64_t x = 0; x < ctx.p; ++x)
        rep.extremal_sup = std::max(
            rep.extremal_sup, std::sqrt(std::norm(two.basis[0][x]) + std::norm(two.basis[1][x])));
    return rep;
}

double eigen_deviation(const HeckeGroup& G, const HeckeCharacter& nu, const QuantumState& phi) {
    double dev = 0.0;
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        const QuantumState g = apply_sl2(G.elements[i].mat, phi, G.ctx);
        for (std::size_t x = 0; x < g.v.size(); ++x)
            dev = std::max(dev, std::abs(g.v[x] - nu.values[i] * phi.v[x]));
    }
    return dev;
}

double subspace_distance(const std::vector<QuantumState>& a, const std::vector<QuantumState>& b) {
    const auto one_sided = [](const std::vector<QuantumState>& from,
                              const std::vector<QuantumState>& onto) {
        double worst = 0.0;
        for (const auto& f : from) {
            QuantumState res = f;
            for (const auto& g : onto) {
                const cplx c = inner_product(f, g);
                for (std::size_t x = 0; x < res.v.size(); ++x) res.v[x] -= c * g.v[x];
            }
            worst = std::max(worst, norm(res));
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

} // namespace catmap
