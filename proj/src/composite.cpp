#include "catmap/composite.hpp"

#include <algorithm>
#include <cmath>

namespace catmap {

namespace {

void require_factor_count(std::size_t got, const CompositeContext& cctx, const char* what) {
    if (got != cctx.factors.size())
        throw ContextMismatch(std::string(what) + ": got " + std::to_string(got) +
                              " components for " + std::to_string(cctx.factors.size()) +
                              " prime factors");
}

} // namespace

CompositeContext make_composite_context(const CatMap& A, std::int64_t N) {
    if (N < 3 || N % 2 == 0)
        throw UnsupportedModulus("modulus must be an odd integer >= 3, got " + std::to_string(N));

    CompositeContext cctx;
    cctx.N = N;
    cctx.A = A;

    // Trial division; composite q never divides because its prime factors
    // were already removed (or rejected as a square).
    std::vector<std::int64_t> primes;
    std::int64_t m = N;
    for (std::int64_t q = 3; q * q <= m; q += 2) {
        if (m % q != 0) continue;
        m /= q;
        if (m % q == 0)
            throw UnsupportedModulus(std::to_string(N) + " is divisible by " +
                                     std::to_string(q) + "^2");
        primes.push_back(q);
    }
    if (m > 1) primes.push_back(m);

    for (std::int64_t q : primes) {
        cctx.factors.push_back(make_prime_context(A, q));
        const std::int64_t cof = N / q;
        cctx.idempotents.push_back(mod_mul(cof, mod_inv(mod_norm(cof, q), q), N));
    }
    return cctx;
}

std::vector<std::int64_t> crt_split(std::int64_t x, const CompositeContext& cctx) {
    std::vector<std::int64_t> out;
    out.reserve(cctx.factors.size());
    for (const auto& f : cctx.factors) out.push_back(mod_norm(x, f.p));
    return out;
}

std::int64_t crt_combine(const std::vector<std::int64_t>& residues, const CompositeContext& cctx) {
    require_factor_count(residues.size(), cctx, "crt_combine");
    std::int64_t x = 0;
    for (std::size_t i = 0; i < residues.size(); ++i)
        x = mod_norm(x + mod_mul(residues[i], cctx.idempotents[i], cctx.N), cctx.N);
    return x;
}

QuantumState tensor_state(const std::vector<QuantumState>& components, const CompositeContext& cctx) {
    require_factor_count(components.size(), cctx, "tensor_state");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].modulus != cctx.factors[i].p)
            throw ContextMismatch("tensor_state: component " + std::to_string(i) +
                                  " lives over " + std::to_string(components[i].modulus) +
                                  ", expected " + std::to_string(cctx.factors[i].p));

    QuantumState out = make_zero_state(cctx.N);
    for (std::int64_t x = 0; x < cctx.N; ++x) {
        cplx v{1.0, 0.0};
        for (std::size_t i = 0; i < components.size(); ++i)
            v *= components[i][x % cctx.factors[i].p];
        out[x] = v;
    }
    return out;
}

LinearOperator tensor_operator(const std::vector<LinearOperator>& ops, const CompositeContext& cctx) {
    require_factor_count(ops.size(), cctx, "tensor_operator");
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (ops[i].modulus != cctx.factors[i].p)
            throw ContextMismatch("tensor_operator: factor " + std::to_string(i) +
                                  " acts on " + std::to_string(ops[i].modulus) +
                                  " points, expected " + std::to_string(cctx.factors[i].p));

    LinearOperator out{cctx.N, CMatrix(cctx.N)};
    const std::size_t k = ops.size();
    // Rows are disjoint output slots, so the parallel result is bitwise
    // identical to a serial fill.
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < cctx.N; ++x)
        for (std::int64_t y = 0; y < cctx.N; ++y) {
            cplx v{1.0, 0.0};
            for (std::size_t i = 0; i < k; ++i)
                v *= ops[i].m.at(x % cctx.factors[i].p, y % cctx.factors[i].p);
            out.m.at(x, y) = v;
        }
    return out;
}

CompositeBasis composite_eigenbasis(const CatMap& A, const CompositeContext& cctx) {
    if (A.a != cctx.A.a || A.b != cctx.A.b || A.c != cctx.A.c || A.d != cctx.A.d)
        throw ContextMismatch("composite_eigenbasis: map differs from the one the context holds");

    const std::size_t k = cctx.factors.size();

    // Per-factor joint eigenvectors, flattened in (character, position)
    // order; the dimensions sum to p, so factor i contributes p_i vectors.
    struct Flat {
        std::int64_t chi = 0, pos = 0;
        const QuantumState* v = nullptr;
        double sup = 0.0;
    };
    std::vector<std::vector<EigenspaceResult>> spaces(k);
    std::vector<std::vector<Flat>> flat(k);
    for (std::size_t i = 0; i < k; ++i) {
        spaces[i] = eigenbasis(A, cctx.factors[i]);
        for (const auto& sp : spaces[i])
            for (std::int64_t j = 0; j < sp.dimension; ++j)
                flat[i].push_back({sp.character.index, j,
                                   &sp.basis[static_cast<std::size_t>(j)],
                                   sp.sup_norms[static_cast<std::size_t>(j)]});
        if (static_cast<std::int64_t>(flat[i].size()) != cctx.factors[i].p)
            throw Error("eigenspace dimensions at p = " + std::to_string(cctx.factors[i].p) +
                        " do not sum to p");
    }

    CompositeBasis out;
    out.N = cctx.N;
    out.num_factors = static_cast<std::int64_t>(k);
    out.sup_ceiling = std::ldexp(1.0, static_cast<int>(k));
    out.vectors.reserve(static_cast<std::size_t>(cctx.N));

    std::vector<std::size_t> idx(k, 0);
    for (std::int64_t n = 0; n < cctx.N; ++n) {
        CompositeVector cv;
        std::vector<QuantumState> comps;
        comps.reserve(k);
        double prod = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            const Flat& f = flat[i][idx[i]];
            cv.char_index.push_back(f.chi);
            cv.vec_index.push_back(f.pos);
            comps.push_back(*f.v);
            prod *= f.sup;
        }
        cv.state = tensor_state(comps, cctx);
        cv.sup = sup_norm(cv.state);
        cv.factor_product = prod;
        out.max_sup = std::max(out.max_sup, cv.sup);
        out.max_product_defect = std::max(out.max_product_defect, std::abs(cv.sup - prod));
        out.vectors.push_back(std::move(cv));

        // Odometer, last factor least significant.
        for (std::size_t i = k; i-- > 0;) {
            if (++idx[i] < flat[i].size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

} // namespace catmap
