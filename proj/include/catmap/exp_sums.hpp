#pragma once

#include "catmap/hecke.hpp"

namespace catmap {

// Tables for the one-variable exponential-sum evaluation of Hecke projections
// at an inert prime.  With the conjugator M = [[X, Y], [Z, W]] of the inert
// centralizer, F = (W^2 - D Z^2)^{-1} (nonzero because D is not a square) and
// psi_F(u) = psi(F u).
struct ExpSumContext {
    HeckeGroup G;
    std::int64_t F = 0;
    int alpha_sign = 1;                // Lambda(W^2 - D Z^2)
    std::int64_t alpha_coeff = 0;      // (Y W - D X Z) F
    std::vector<double> lambda_t;      // t -> Lambda(-2t / (1 - D t^2)), slot 0 unused
    std::vector<std::int64_t> inv_t;   // t -> t^{-1}, slot 0 unused
    std::vector<cplx> psi_F;           // u -> psi(F u)
};

// WrongPrimeType unless the prime is inert.
ExpSumContext make_exp_sum_context(HeckeGroup G);
ExpSumContext make_exp_sum_context(const CatMap& A, const PrimeContext& ctx);

// Character data aligned with the Hilbert-90 parameter t.
struct PreparedCharacter {
    std::int64_t index = 0;
    cplx minus_one;            // conj(nu(-I)), the t = infinity value
    std::vector<cplx> nu_bar;  // t -> conj(nu(h(t))), slot 0 unused
};

PreparedCharacter prepare_character(const ExpSumContext& E, const HeckeCharacter& nu);

// alpha(i, x) = Lambda(W^2 - D Z^2) psi((Y W - D X Z)(x^2 - i^2) F); modulus 1.
cplx alpha(std::int64_t i, std::int64_t x, const ExpSumContext& E);

// E_nu(i, x) = sum_{t in F_p^x} conj(nu(h(t))) Lambda(-2t / (1 - D t^2))
//              psi_F((x - i)^2 / (2t) + D t (x + i)^2 / 2)
// evaluated from the precomputed tables.
cplx exp_sum(const PreparedCharacter& nu, std::int64_t i, std::int64_t x, const ExpSumContext& E);

// The same sum with every factor recomputed from scratch per term (no tables);
// the serial reference for the table-driven kernel.
cplx exp_sum_naive(const HeckeCharacter& nu, std::int64_t i, std::int64_t x,
                   const ExpSumContext& E);

// Three-term reconstruction of the projected delta:
//   (P_nu delta_i)(x) = (delta_i(x) + conj(nu(-I)) Lambda(-1) delta_i(-x)
//                        + alpha(i,x) S_r(-1,p) E_nu(i,x) / sqrt(p)) / (p + 1).
// Must agree entrywise with project(G, nu, delta_i); the tests enforce this.
QuantumState projection_via_exp_sum(const HeckeCharacter& nu, std::int64_t i,
                                    const ExpSumContext& E);

// Bound regimes of |E_nu(i, x)|: generic (x != +-i, ceiling 4 sqrt p),
// diagonal (x = +-i, ceiling 3 sqrt p), and the origin (ceiling 2 sqrt p).
enum class Regime { Generic, Diagonal, ZeroZero };

Regime classify_regime(std::int64_t i, std::int64_t x, std::int64_t p);

struct BoundReport {
    std::int64_t p = 0;
    bool exhaustive = true;
    std::int64_t triples = 0;   // (nu, i, x) combinations examined
    std::uint64_t seed = 0;     // sampling seed; 0 in exhaustive mode
    double max_generic = 0.0;   // observed max |E| / sqrt(p) per regime
    double max_diagonal = 0.0;
    double max_zero = 0.0;
    std::int64_t n_generic = 0;
    std::int64_t n_diagonal = 0;
    std::int64_t n_zero = 0;
    bool pass = false;          // maxima within 4 / 3 / 2 (+ 1e-8)
};

// Scan every (nu, i, x); characters are swept in parallel, each writing its
// own maxima slot, so the report is schedule-independent.
BoundReport verify_bounds_exhaustive(const ExpSumContext& E);

// Scan k seeded-random triples (serial, reproducible by seed).
BoundReport verify_bounds_sampled(const ExpSumContext& E, std::int64_t k, std::uint64_t seed);

} // namespace catmap
