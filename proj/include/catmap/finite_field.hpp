#pragma once

#include "catmap/common.hpp"

#include <unordered_map>

namespace catmap {

// Hyperbolic element of SL2(Z), congruent to the identity mod 2, acting on
// the torus.  Entries are row-major: [[a, b], [c, d]].
struct CatMap {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    std::int64_t trace() const { return a + d; }
    std::int64_t det() const { return a * d - b * c; }
};

// Throws InvalidCatMap unless det = 1, |trace| > 2 and A = I mod 2.
void validate_cat_map(const CatMap& A);

enum class PrimeKind { Inert, Split, Ramified };

const char* to_string(PrimeKind k);

// Element of SL2(F_p), entries reduced to [0, p).
struct Sl2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    bool operator==(const Sl2&) const = default;
};

Sl2 sl2_reduce(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p);
Sl2 sl2_reduce(const CatMap& A, std::int64_t p);
Sl2 sl2_mul(const Sl2& x, const Sl2& y, std::int64_t p);
Sl2 sl2_inv(const Sl2& x, std::int64_t p);

// Per-prime quantization data: p, the canonical additive character parameter
// r = (p+1)/2 (the inverse of 2 mod p), the classification of the map, and
// the Fourier normalization S_r(-1, p).
struct PrimeContext {
    std::int64_t p = 0;
    std::int64_t r = 0;
    PrimeKind kind = PrimeKind::Inert;
    bool upper_triangular = false; // c = 0 mod p
    cplx fourier_scalar;           // S_r(-1, p)
};

// Validates p (odd prime) and A, classifies, caches the Gauss sum.
PrimeContext make_prime_context(const CatMap& A, std::int64_t p);

// Legendre symbol by Euler's criterion.  Completely multiplicative in a;
// legendre(0) = 0.  Throws InvalidPrime unless p is an odd prime.
int legendre(std::int64_t a, std::int64_t p);

// psi(x) = e^{2 pi i r x / p}.  The exponent is reduced exactly in integer
// arithmetic before touching floating point.
cplx additive_char(std::int64_t x, const PrimeContext& ctx);

// S_r(a, p) = p^{-1/2} sum_{x mod p} e(-r a x^2 / p).  Direct summation;
// equals sqrt(p) at a = 0 and has modulus 1 otherwise.
cplx gauss_sum(std::int64_t a, const PrimeContext& ctx);

// Splitting type of x^2 - tr(A) x + 1 mod p, i.e. the Legendre symbol of
// tr(A)^2 - 4.
PrimeKind classify_prime(const CatMap& A, std::int64_t p);

// Smallest positive quadratic non-residue mod p.
std::int64_t find_nonsquare(std::int64_t p);

// a + b sqrt(D) with D a fixed non-square; norm is a^2 - D b^2.
struct Fp2 {
    std::int64_t a = 1, b = 0;

    bool operator==(const Fp2&) const = default;
};

Fp2 fp2_mul(const Fp2& x, const Fp2& y, std::int64_t D, std::int64_t p);
std::int64_t fp2_norm(const Fp2& x, std::int64_t D, std::int64_t p);

// Point of P^1(F_p): a residue t or the point at infinity.
struct P1 {
    std::int64_t t = 0;
    bool infinite = false;

    static P1 inf() { return {0, true}; }
};

// The norm-one parametrization t -> (1 + t sqrt D) / (1 - t sqrt D).  It is a
// bijection from P^1(F_p) onto the norm-one subgroup of F_{p^2}^x, with
// t = 0 -> 1 and t = infinity -> -1.  Coefficients: a = (1 + D t^2)/(1 - D t^2),
// b = 2 t / (1 - D t^2).
Fp2 hilbert90(P1 t, std::int64_t D, const PrimeContext& ctx);

// Generator of the cyclic norm-one subgroup (order p + 1) and its exhaustive
// discrete log table.
struct TorusDlog {
    std::int64_t p = 0;
    std::int64_t D = 0;
    std::int64_t order = 0; // p + 1
    Fp2 generator;
    std::unordered_map<std::int64_t, std::int64_t> table; // key a*p + b

    // Throws NotInGroup unless x has norm one.
    std::int64_t dlog(const Fp2& x) const;
};

TorusDlog torus_generator_and_dlog(std::int64_t D, const PrimeContext& ctx);

} // namespace catmap
