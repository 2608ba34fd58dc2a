#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

using cplx = std::complex<double>;

// ----- error taxonomy -------------------------------------------------------
//
// All throwing contracts in the library use one of these types so callers can
// distinguish misuse (bad input) from internal failure.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPrime : Error { using Error::Error; };          // p not an odd prime
struct InvalidCatMap : Error { using Error::Error; };         // not hyperbolic / det != 1 / parity
struct ContextMismatch : Error { using Error::Error; };       // mixed moduli
struct SingularGenerator : Error { using Error::Error; };     // t = 0 in a diagonal torus element
struct NotSpecialLinear : Error { using Error::Error; };      // det != 1 mod p
struct UpperTriangularMatrix : Error { using Error::Error; }; // closed form needs c != 0
struct NotInGroup : Error { using Error::Error; };            // matrix outside the centralizer
struct WrongPrimeType : Error { using Error::Error; };        // op needs another classification
struct UnsupportedModulus : Error { using Error::Error; };    // composite N not odd square-free
struct ConjugatorNotFound : Error { using Error::Error; };    // normal form unavailable

// ----- modular arithmetic ----------------------------------------------------

// Reduce x into [0, m).
constexpr std::int64_t mod_norm(std::int64_t x, std::int64_t m) {
    std::int64_t v = x % m;
    return v < 0 ? v + m : v;
}

constexpr std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return mod_norm(mod_norm(a, m) * mod_norm(b, m), m);
}

constexpr std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t acc = 1 % m;
    std::int64_t b = mod_norm(base, m);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return acc;
}

// Inverse mod m via extended Euclid; requires gcd(a, m) = 1.
std::int64_t mod_inv(std::int64_t a, std::int64_t m);

bool is_odd_prime(std::int64_t p);

// Square root mod an odd prime by deterministic scan, or -1 if a is not a
// square.  Desk-scale moduli keep the O(p) cost irrelevant.
std::int64_t sqrt_mod(std::int64_t a, std::int64_t p);

// ----- roots of unity --------------------------------------------------------
//
// Every root of unity in the library is produced from an exactly reduced
// integer pair (k mod m, m); no accumulated floating-point angles.

inline cplx unit_root(std::int64_t k, std::int64_t m) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(mod_norm(k, m)) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

struct RootTable {
    std::int64_t m = 0;
    std::vector<cplx> w; // w[k] = e^{2 pi i k / m}

    const cplx& operator[](std::int64_t k) const { return w[static_cast<std::size_t>(k)]; }
};

RootTable make_root_table(std::int64_t m);

// ----- deterministic RNG -----------------------------------------------------
//
// mt19937_64 has a portable output sequence; the distributions below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined, so
// seeded runs are reproducible byte for byte everywhere.

struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    // Uniform in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do { v = gen(); } while (v >= limit);
        return v % n;
    }

    std::int64_t residue(std::int64_t p) { return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p))); }

    std::mt19937_64 gen;
};

} // namespace catmap
