#pragma once

#include "catmap/finite_field.hpp"
#include "catmap/linalg.hpp"

namespace catmap {

// Vector in L^2(Z/m) with the normalized inner product
// <f, g> = (1/m) sum_x f(x) conj(g(x)).
struct QuantumState {
    std::int64_t modulus = 0;
    std::vector<cplx> v;

    cplx& operator[](std::int64_t x) { return v[static_cast<std::size_t>(x)]; }
    const cplx& operator[](std::int64_t x) const { return v[static_cast<std::size_t>(x)]; }
};

QuantumState make_zero_state(std::int64_t modulus);
QuantumState make_delta(const PrimeContext& ctx, std::int64_t i);

cplx inner_product(const QuantumState& f, const QuantumState& g); // ContextMismatch on mixed moduli
double norm(const QuantumState& f);
double sup_norm(const QuantumState& f);

struct LinearOperator {
    std::int64_t modulus = 0;
    CMatrix m;
};

QuantumState apply(const LinearOperator& op, const QuantumState& f);

// Generator actions of the Weil representation.
//
//   [[1,b],[0,1]]       (U f)(x) = psi(b x^2) f(x)
//   [[t,0],[0,t^-1]]    (U f)(x) = Lambda(t) f(t x)
//   [[0,1],[-1,0]]      (U f)(x) = S_r(-1,p) p^{-1/2} sum_y f(y) psi(2 x y)
//
// with psi(x) = e(r x / p) and Lambda the Legendre symbol.
QuantumState apply_upper(std::int64_t b, const QuantumState& f, const PrimeContext& ctx);
QuantumState apply_diag(std::int64_t t, const QuantumState& f, const PrimeContext& ctx); // SingularGenerator at t = 0
QuantumState apply_fourier(const QuantumState& f, const PrimeContext& ctx);

// U_p(M) as a dense matrix, assembled column by column through the Bruhat
// factorization M = [[1,b1],[0,1]] w [[1,b2],[0,1]] [[t,0],[0,t^-1]] with
// t = -c, b1 = a/c, b2 = c d (and the two-factor form when c = 0).  Entries
// of M are reduced mod p; the operator depends on M mod p only.
LinearOperator build_unitary(const Sl2& M, const PrimeContext& ctx);
LinearOperator build_unitary(const CatMap& M, const PrimeContext& ctx);

// Closed form for U_p(M) delta_i when c != 0:
//   (U_p(M) delta_i)(x) = S_r(-1,p) p^{-1/2} Lambda(-c) psi((a x^2 + d i^2 - 2 x i)/c).
// This is an independent route from build_unitary; the tests compare the two.
QuantumState delta_action(const Sl2& M, std::int64_t i, const PrimeContext& ctx);

// Apply U_p(M) to a state through the generator factorization without
// materializing the matrix.  O(p^2) because of the Fourier step.
QuantumState apply_sl2(const Sl2& M, const QuantumState& f, const PrimeContext& ctx);

cplx trace_unitary(const Sl2& M, const PrimeContext& ctx);

// Uniform random element of SL2(F_p).
Sl2 random_sl2(Rng& rng, std::int64_t p);

// Max entrywise deviation of U(M1 M2) from U(M1) U(M2) over seeded trials.
double check_multiplicativity(const PrimeContext& ctx, int trials, std::uint64_t seed);

} // namespace catmap
