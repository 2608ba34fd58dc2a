#pragma once

#include "catmap/hecke.hpp"

namespace catmap {

// Odd square-free modulus N = p_1 ... p_k with per-prime quantization data
// and the CRT index maps between Z/N and the product of the Z/p_i.
struct CompositeContext {
    std::int64_t N = 0;
    CatMap A;
    std::vector<PrimeContext> factors;      // ascending by prime
    std::vector<std::int64_t> idempotents;  // e_i = 1 mod p_i, 0 mod p_j

    std::int64_t num_factors() const { return static_cast<std::int64_t>(factors.size()); }
};

// Factors N and builds one PrimeContext per prime.  UnsupportedModulus when
// N is even, below 3 or divisible by a square; A is validated per factor.
CompositeContext make_composite_context(const CatMap& A, std::int64_t N);

// x mod N -> (x mod p_1, ..., x mod p_k).
std::vector<std::int64_t> crt_split(std::int64_t x, const CompositeContext& cctx);

// Inverse of crt_split; ContextMismatch unless one residue per factor.
std::int64_t crt_combine(const std::vector<std::int64_t>& residues, const CompositeContext& cctx);

// phi(x) = prod_i phi_i(x mod p_i).  Under the 1/m-weighted inner products
// both the L^2 norm and the sup norm of the product are the products of the
// factor norms.  ContextMismatch unless component i lives over p_i.
QuantumState tensor_state(const std::vector<QuantumState>& components, const CompositeContext& cctx);

// (T f)(x) indexed through crt_split: T(x, y) = prod_i T_i(x_i, y_i), so the
// tensor of unitaries is unitary and U_N(A) is by definition the tensor of
// the per-prime U_{p_i}(A).  ContextMismatch unless op i acts on p_i points.
LinearOperator tensor_operator(const std::vector<LinearOperator>& ops, const CompositeContext& cctx);

// One product eigenfunction: per-factor character and basis position, the
// tensor state, its sup norm and the product of the factor sup norms.
struct CompositeVector {
    std::vector<std::int64_t> char_index;
    std::vector<std::int64_t> vec_index;
    QuantumState state;
    double sup = 0.0;
    double factor_product = 0.0;
};

struct CompositeBasis {
    std::int64_t N = 0;
    std::int64_t num_factors = 0;
    std::vector<CompositeVector> vectors;   // N of them, orthonormal
    double max_sup = 0.0;
    double max_product_defect = 0.0;        // max_v |sup(v) - factor_product(v)|
    double sup_ceiling = 0.0;             // 2^k
};

// All N products of per-prime joint eigenvectors, ordered lexicographically
// by the per-factor (character index, basis position) pairs with the
// smallest prime most significant.  Tensors of orthonormal families stay
// orthonormal because CRT is a bijection, and every vector is a joint
// eigenfunction of all tensor Hecke operators.  ContextMismatch when A is
// not the map the context was built with.
CompositeBasis composite_eigenbasis(const CatMap& A, const CompositeContext& cctx);

} // namespace catmap
