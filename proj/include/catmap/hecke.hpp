#pragma once

#include "catmap/weil.hpp"

namespace catmap {

// One element of the centralizer C_A in SL2(F_p), together with its torus
// parameters: inert / split use p1 = t (p1 = -1 for the point at infinity),
// ramified uses (p1, p2) = (sigma, u) for M [[sigma, u],[0, sigma]] M^{-1}.
struct HeckeElement {
    Sl2 mat;
    std::int64_t p1 = 0;
    std::int64_t p2 = 0;
};

// Precomputed column action of U_p(B) used by the projector assembly.
struct ElementAction {
    bool fourier_path = false; // c != 0
    // c != 0: column i is scalar * e(r (a x^2 + d i^2 - 2 x i) c^-1 / p).
    std::int64_t a = 0, d = 0, cinv = 0;
    cplx scalar;
    // c = 0: column i is a spike at inv_t * i with sign * e(r b_invt i^2 / p).
    std::int64_t inv_t = 0, b_invt = 0;
    double sign = 1.0;
};

// The centralizer of A mod p with its group data: order p+1 (inert, a
// nonsplit torus), p-1 (split, a conjugated diagonal torus) or 2p (ramified,
// conjugated +-unipotents).
struct HeckeGroup {
    PrimeContext ctx;
    Sl2 A;
    PrimeKind kind = PrimeKind::Inert;
    Sl2 M;                       // conjugator, det 1 mod p
    std::int64_t D = 0;          // inert: canonical non-square, else 0
    std::vector<HeckeElement> elements;
    std::vector<std::int64_t> dlog;   // per element: inert = torus dlog, split = index of s
    std::int64_t prim_root = 0;       // split: smallest primitive root mod p
    TorusDlog torus;                  // inert only
    std::vector<ElementAction> actions;
    RootTable roots_p;

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
    std::int64_t index_of(const Sl2& B) const; // NotInGroup if absent
};

// Conjugator M in SL2(F_p) bringing A mod p to its torus normal form.  The
// inert case solves the intertwining system M K = J~ M for K = [[0,D],[1,0]]
// and J~ the rescaled traceless part of A, then corrects det(M) to 1 with a
// torus factor (the norm map onto F_p^x is onto).  Split: scaled eigenvector
// columns, upper triangular whenever A is.  Ramified: a Jordan frame, or
// ConjugatorNotFound when A = +-I mod p (then the centralizer is all of
// SL2(F_p) and the 2p-element normal form does not exist).
Sl2 find_conjugator(const CatMap& A, const PrimeContext& ctx);

HeckeGroup centralizer(const CatMap& A, const PrimeContext& ctx);

// Character of C_A.  Flat index: inert k in [0, p], split k in [0, p-2],
// ramified sign_bit * p + k with values
//   nu(sigma, u) = sign^{[sigma = -1]} e(k u sigma / p).
struct HeckeCharacter {
    std::int64_t index = 0;
    std::int64_t k = 0;
    int sign = 1; // ramified only
    std::vector<cplx> values; // aligned with HeckeGroup::elements
};

std::vector<HeckeCharacter> characters(const HeckeGroup& G);

// U_p(B) for B in C_A; NotInGroup otherwise.
LinearOperator hecke_operator(const HeckeGroup& G, const Sl2& B);

// P_nu f = |C_A|^{-1} sum_B conj(nu(B)) U_p(B) f.
QuantumState project(const HeckeGroup& G, const HeckeCharacter& nu, const QuantumState& f);

// Dense P_nu; column i is P_nu delta_i.
LinearOperator projector_matrix(const HeckeGroup& G, const HeckeCharacter& nu);

struct EigenspaceResult {
    HeckeCharacter character;
    std::int64_t dimension = 0;
    std::vector<QuantumState> basis;  // orthonormal, phase-fixed
    std::vector<double> sup_norms;
};

// Joint eigenspace for nu: numerical rank of the Gram matrix of the
// projected deltas at relative threshold 1e-6, basis by pivoted
// orthogonalization (pivot = largest residual norm, ties to the smallest
// index), each vector's first coordinate above 1e-8 in modulus made positive
// real.
EigenspaceResult eigenspace(const HeckeGroup& G, const HeckeCharacter& nu);

// All eigenspaces in character order; dimensions add up to p.
std::vector<EigenspaceResult> eigenbasis(const CatMap& A, const PrimeContext& ctx);

// Ramified closed form: phi_0 = sqrt(p) U_p(M) delta_0 and
// phi_i^{+-} = sqrt(p/2) U_p(M)(delta_i +- delta_{-i}), 1 <= i <= (p-1)/2,
// each a one-dimensional eigenspace with its character attached.
// Order: phi_0, then (phi_1^+, phi_1^-), (phi_2^+, phi_2^-), ...
std::vector<EigenspaceResult> ramified_closed_form(const CatMap& A, const PrimeContext& ctx);

// Split closed form phi_chi = sqrt(p/(p-1)) U_p(M) chi over multiplicative
// characters chi (chi(0) = 0) plus phi_0 = sqrt(p) U_p(M) delta_0, grouped by
// Hecke character; the pair {phi_chi0, phi_0} shares one two-dimensional
// eigenspace.  Valid for any split prime; for a non-upper-triangular M this
// route is experimental and is cross-checked against the projector route.
std::vector<EigenspaceResult> split_closed_form(const CatMap& A, const PrimeContext& ctx);

struct SplitUtReport {
    std::vector<EigenspaceResult> spaces;
    std::int64_t two_dim_char_index = 0;
    double chi_sup = 0.0;      // common sup of the phi_chi family
    double phi0_sup = 0.0;     // sup of phi_0
    double extremal_sup = 0.0; // max sup norm over unit vectors of the 2-dim space
};

// Upper-triangular split case; WrongPrimeType otherwise.
SplitUtReport split_ut_closed_form(const CatMap& A, const PrimeContext& ctx);

// max_B max_x |(U_p(B) phi)(x) - nu(B) phi(x)|
double eigen_deviation(const HeckeGroup& G, const HeckeCharacter& nu, const QuantumState& phi);

// Largest residual of one orthonormal family against the span of another;
// equals the sine of the largest principal angle when dimensions match.
double subspace_distance(const std::vector<QuantumState>& a, const std::vector<QuantumState>& b);

} // namespace catmap
