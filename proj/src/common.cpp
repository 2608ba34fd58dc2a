#include "catmap/common.hpp"

namespace catmap {

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = m, newr = mod_norm(a, m);
    while (newr != 0) {
        const std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw Error("mod_inv: argument not invertible");
    return mod_norm(t, m);
}

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t sqrt_mod(std::int64_t a, std::int64_t p) {
    a = mod_norm(a, p);
    // Return the representative in [0, (p-1)/2] so the choice is canonical.
    for (std::int64_t x = 0; x <= (p - 1) / 2; ++x)
        if (x * x % p == a) return x;
    return -1;
}

RootTable make_root_table(std::int64_t m) {
    RootTable t;
    t.m = m;
    t.w.resize(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) t.w[static_cast<std::size_t>(k)] = unit_root(k, m);
    return t;
}

} // namespace catmap
