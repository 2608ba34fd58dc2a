#include "catmap/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace catmap {

CMatrix CMatrix::identity(std::int64_t dim) {
    CMatrix m(dim);
    for (std::int64_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {

// Row-of-a times b, accumulated left to right.  Both matmul variants call
// this, which keeps their outputs bitwise identical.
inline void row_product(const CMatrix& a, const CMatrix& b, std::int64_t i, CMatrix& out) {
    const std::int64_t n = a.n;
    cplx* dst = &out.at(i, 0);
    for (std::int64_t k = 0; k < n; ++k) {
        const cplx aik = a.at(i, k);
        if (aik == cplx{}) continue;
        const cplx* brow = &b.at(k, 0);
        for (std::int64_t j = 0; j < n; ++j) dst[j] += aik * brow[j];
    }
}

inline cplx dot_row(const CMatrix& a, const std::vector<cplx>& x, std::int64_t i) {
    cplx acc{};
    for (std::int64_t j = 0; j < a.n; ++j) acc += a.at(i, j) * x[static_cast<std::size_t>(j)];
    return acc;
}

} // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.n != b.n) throw Error("matmul: dimension mismatch");
    CMatrix out(a.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < a.n; ++i) row_product(a, b, i, out);
    return out;
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
    if (a.n != b.n) throw Error("matmul: dimension mismatch");
    CMatrix out(a.n);
    for (std::int64_t i = 0; i < a.n; ++i) row_product(a, b, i, out);
    return out;
}

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x) {
    if (a.n != static_cast<std::int64_t>(x.size())) throw Error("matvec: dimension mismatch");
    std::vector<cplx> y(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < a.n; ++i) y[static_cast<std::size_t>(i)] = dot_row(a, x, i);
    return y;
}

std::vector<cplx> matvec_serial(const CMatrix& a, const std::vector<cplx>& x) {
    if (a.n != static_cast<std::int64_t>(x.size())) throw Error("matvec: dimension mismatch");
    std::vector<cplx> y(x.size());
    for (std::int64_t i = 0; i < a.n; ++i) y[static_cast<std::size_t>(i)] = dot_row(a, x, i);
    return y;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.n);
    for (std::int64_t i = 0; i < a.n; ++i)
        for (std::int64_t j = 0; j < a.n; ++j) out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

cplx trace(const CMatrix& a) {
    cplx t{};
    for (std::int64_t i = 0; i < a.n; ++i) t += a.at(i, i);
    return t;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.n != b.n) throw Error("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.d.size(); ++k) m = std::max(m, std::abs(a.d[k] - b.d[k]));
    return m;
}

double unitarity_defect(const CMatrix& u) {
    const CMatrix g = matmul(adjoint(u), u);
    double m = 0.0;
    for (std::int64_t i = 0; i < g.n; ++i)
        for (std::int64_t j = 0; j < g.n; ++j) {
            const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{};
            m = std::max(m, std::abs(g.at(i, j) - want));
        }
    return m;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const cplx& v : a.d) s += std::norm(v);
    return std::sqrt(s);
}

double largest_singular_value(const CMatrix& a) {
    const std::int64_t n = a.n;
    if (n == 0) return 0.0;
    const CMatrix ah = adjoint(a);
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = cplx{1.0 + static_cast<double>(i % 7), 0.5 * static_cast<double>(i % 3)};
    double prev = 0.0;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<cplx> w = matvec_serial(a, v);
        w = matvec_serial(ah, w);
        double norm = 0.0;
        for (const cplx& c : w) norm += std::norm(c);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (cplx& c : w) c /= norm;
        v = std::move(w);
        const double sigma = std::sqrt(norm);
        if (std::abs(sigma - prev) <= 1e-13 * std::max(1.0, sigma)) return sigma;
        prev = sigma;
    }
    return prev;
}

} // namespace catmap
