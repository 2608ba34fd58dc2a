#pragma once

#include "catmap/common.hpp"

namespace catmap {

// Dense row-major complex matrix, the workhorse for p x p operators.
struct CMatrix {
    std::int64_t n = 0;
    std::vector<cplx> d;

    CMatrix() = default;
    explicit CMatrix(std::int64_t dim)
        : n(dim), d(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

    cplx& at(std::int64_t r, std::int64_t c) { return d[static_cast<std::size_t>(r * n + c)]; }
    const cplx& at(std::int64_t r, std::int64_t c) const { return d[static_cast<std::size_t>(r * n + c)]; }

    static CMatrix identity(std::int64_t dim);
};

// Parallel kernels, each with a serial reference used by the tests and the
// benchmark target.  The parallel versions assign disjoint output slots to
// iterations, so results are bitwise identical to the serial ones.

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);
std::vector<cplx> matvec_serial(const CMatrix& a, const std::vector<cplx>& x);

CMatrix adjoint(const CMatrix& a);
cplx trace(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// max |(U* U - I)_{jk}|
double unitarity_defect(const CMatrix& u);

// Largest singular value by power iteration on A* A (deterministic start).
double largest_singular_value(const CMatrix& a);

double frobenius_norm(const CMatrix& a);

} // namespace catmap
